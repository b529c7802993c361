"""Euclid's algorithm with full traces, and its reversal (dilcuE).

``euclid_trace`` runs the remainder chain of two GF(2) polynomials down to
the zero remainder, keeping every quotient and remainder.  For coprime
inputs the chain necessarily ends with the remainder pair (1, 0): the last
nonzero remainder is 1, and dividing by 1 contributes one final quotient.

``dilcue`` runs the algorithm backwards: from a terminal remainder pair and
a quotient sequence it reconstructs the original (dividend, divisor) pair.
For a coprime pair of equal degree, feeding the trace quotients reversed
back into ``dilcue`` from the seed (1, 0) reproduces the pair exactly.

``bijection_flip`` maps a non-coprime pair to a coprime one by rewriting
the terminal zero remainder to 1 and replaying the same quotients.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple

from .gf2poly import Poly, divmod_, mul


class EuclidTrace(NamedTuple):
    quotients: tuple[Poly, ...]   # division order
    remainders: tuple[Poly, ...]  # dividend, divisor, then every remainder down to 0
    gcd: Poly


def euclid_trace(f: Poly, g: Poly) -> EuclidTrace:
    """Run Euclid's algorithm on (f, g), recording quotients and remainders.

    Raises ValueError when both inputs are zero.
    """
    if f == 0 and g == 0:
        raise ValueError("gcd(0, 0) is undefined; trace requires a nonzero input")
    quotients = []
    remainders = [f, g]
    a, b = f, g
    while b:
        q, r = divmod_(a, b)
        quotients.append(q)
        remainders.append(r)
        a, b = b, r
    return EuclidTrace(tuple(quotients), tuple(remainders), a)


def dilcue(quotients: Iterable[Poly], seed: tuple[Poly, Poly] = (1, 0)) -> tuple[Poly, Poly]:
    """Reverse Euclid's algorithm: rebuild a pair from a quotient sequence.

    Starting from the terminal remainder pair ``seed`` (the default (1, 0)
    synthesizes coprime pairs), each quotient q advances
    (a, b) -> (q*a + b, a).  Returns the final (dividend, divisor) pair.

    Raises ValueError for an empty sequence.
    """
    a, b = seed
    n = 0
    for q in quotients:
        a, b = mul(q, a) ^ b, a
        n += 1
    if n == 0:
        raise ValueError("quotient sequence is empty")
    return a, b


def bijection_flip(f: Poly, g: Poly) -> tuple[Poly, Poly]:
    """Map a non-coprime pair to a coprime one sharing its quotient sequence.

    Runs Euclid on (f, g), replaces the terminal zero remainder with 1, and
    replays the same quotients in reverse through ``dilcue``.  The result is
    always coprime, and at most one of the two output polynomials can have a
    zero constant term.

    Raises ValueError when (f, g) is already coprime.
    """
    trace = euclid_trace(f, g)
    if trace.gcd == 1:
        raise ValueError("pair is coprime; the flip is defined on non-coprime pairs")
    return dilcue(reversed(trace.quotients), (trace.gcd, 1))
