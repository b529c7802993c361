"""Cellular-automaton layer: local rules, global maps, Latin squares.

A local rule of diameter d maps a window of d cells to one output bit; the
global map slides that window over an input of length m and produces
m - d + 1 output cells.  When the input length is 2(d-1) and the rule is
bipermutive (flipping either outermost cell always flips the output), the
global map tabulates as a Latin square of order 2^(d-1): the left and right
(d-1)-bit input blocks index row and column, the output block is the entry.
Blocks are decoded most-significant-bit first (leftmost cell = highest bit).

Two linear rules yield orthogonal Latin squares exactly when their
associated polynomials (coefficient a_i of cell x_i = coefficient of X^i)
are coprime.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .gf2poly import Poly, constant_term, degree

BIPERMUTIVITY_SCAN_LIMIT = 20  # truth-table scans are exhaustive in 2^d


@dataclass(frozen=True)
class LocalRule:
    """A CA local rule of diameter d, either linear or given by truth table.

    Linear rules store the coefficient mask ``coeffs`` (bit i = multiplier
    of cell x_i, cells numbered left to right) and must XOR both outermost
    cells (bits 0 and d-1 set).  General rules store ``table`` with
    2^d entries indexed by the window read most-significant-bit first
    (x_0 is the highest bit), which matches Wolfram rule numbering.
    """

    diameter: int
    coeffs: Optional[int] = None
    table: Optional[tuple[int, ...]] = field(default=None, repr=False)

    def __post_init__(self) -> None:
        d = self.diameter
        if d < 1:
            raise ValueError(f"diameter must be positive, got {d}")
        if (self.coeffs is None) == (self.table is None):
            raise ValueError("exactly one of coeffs and table must be given")
        if self.coeffs is not None:
            if not 0 <= self.coeffs < (1 << d):
                raise ValueError(f"coefficient mask {self.coeffs:#x} does not fit diameter {d}")
            if not (self.coeffs & 1 and (self.coeffs >> (d - 1)) & 1):
                raise ValueError("linear rules must XOR both outermost cells")
        else:
            if d > BIPERMUTIVITY_SCAN_LIMIT:
                raise ValueError(f"truth-table rules are limited to diameter {BIPERMUTIVITY_SCAN_LIMIT}")
            if len(self.table) != 1 << d:
                raise ValueError(f"truth table needs {1 << d} entries for diameter {d}, got {len(self.table)}")
            if any(v not in (0, 1) for v in self.table):
                raise ValueError("truth table entries must be bits")

    @classmethod
    def linear(cls, coeffs: int, diameter: int) -> "LocalRule":
        return cls(diameter=diameter, coeffs=coeffs)

    @classmethod
    def from_table(cls, table: Sequence[int]) -> "LocalRule":
        d = len(table).bit_length() - 1
        if 1 << d != len(table):
            raise ValueError(f"truth table length must be a power of two, got {len(table)}")
        return cls(diameter=d, table=tuple(table))

    @property
    def kind(self) -> str:
        return "linear" if self.coeffs is not None else "general"

    def evaluate(self, window: Sequence[int]) -> int:
        """Apply the rule to one window of ``diameter`` cells."""
        d = self.diameter
        if len(window) != d:
            raise ValueError(f"window has {len(window)} cells, rule diameter is {d}")
        if self.coeffs is not None:
            mask = self.coeffs
            out = 0
            for i in range(d):
                if (mask >> i) & 1:
                    out ^= window[i] & 1
            return out
        idx = 0
        for cell in window:
            idx = (idx << 1) | (cell & 1)
        return self.table[idx]

    def truth_table(self) -> tuple[int, ...]:
        """Full 2^d truth table, index read most-significant-bit first."""
        if self.table is not None:
            return self.table
        d = self.diameter
        if d > BIPERMUTIVITY_SCAN_LIMIT:
            raise ValueError(f"refusing to materialize 2^{d} truth-table entries")
        rev = _bit_reverse(self.coeffs, d)
        return tuple(_parity(v & rev) for v in range(1 << d))


def _bit_reverse(v: int, width: int) -> int:
    out = 0
    for i in range(width):
        if (v >> i) & 1:
            out |= 1 << (width - 1 - i)
    return out


def _parity(v: int) -> int:
    return v.bit_count() & 1


@dataclass(frozen=True)
class LatinSquare:
    """An order-N array over {0, .., N-1}; validity is checked by is_latin."""

    order: int
    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = self.order
        if n < 1:
            raise ValueError(f"order must be positive, got {n}")
        if len(self.entries) != n or any(len(row) != n for row in self.entries):
            raise ValueError(f"entries must form an {n}x{n} array")


def rule_from_poly(p: Poly) -> LocalRule:
    """Linear rule of diameter degree(p)+1 with cell coefficients read off p.

    Requires p of degree >= 1 with constant term 1 (so the rule XORs both
    outermost cells and is bipermutive).
    """
    if p == 0 or degree(p) < 1:
        raise ValueError(f"polynomial {p:#x} must have degree at least 1")
    if not constant_term(p):
        raise ValueError(f"polynomial {p:#x} must have constant term 1")
    return LocalRule.linear(p, p.bit_length())


def poly_from_rule(rule: LocalRule) -> Poly:
    """Inverse of rule_from_poly; defined for linear rules only."""
    if rule.coeffs is None:
        raise ValueError("only linear rules correspond to polynomials")
    return rule.coeffs


def ca_global_map(rule: LocalRule, cells: Sequence[int]) -> list[int]:
    """Slide the rule over ``cells``; output has len(cells) - diameter + 1 bits."""
    d = rule.diameter
    m = len(cells)
    if m < d:
        raise ValueError(f"input length {m} is below the rule diameter {d}")
    return [rule.evaluate(cells[i:i + d]) for i in range(m - d + 1)]


def is_bipermutive(rule: LocalRule) -> bool:
    """Whether flipping either outermost cell always flips the output."""
    d = rule.diameter
    if rule.coeffs is not None:
        return bool(rule.coeffs & 1) and bool((rule.coeffs >> (d - 1)) & 1)
    table = rule.table
    left = 1 << (d - 1)
    for v in range(1 << d):
        if table[v] == table[v ^ left] or table[v] == table[v ^ 1]:
            return False
    return True


def latin_square(rule: LocalRule) -> LatinSquare:
    """Tabulate the global map of a bipermutive rule as a Latin square.

    Row i and column j decode to the left and right (d-1)-bit halves of the
    input (most significant bit = leftmost cell); the entry is the encoded
    output block.  Refuses non-bipermutive rules (their tables would not be
    Latin squares) and rules of diameter < 2.
    """
    d = rule.diameter
    if d < 2:
        raise ValueError(f"Latin squares need diameter >= 2, got {d}")
    if not is_bipermutive(rule):
        raise ValueError("rule is not bipermutive; its global map is not a Latin square")
    nbits = d - 1
    n = 1 << nbits
    table = rule.truth_table()
    mask = (1 << d) - 1
    rows = []
    for i in range(n):
        left = i << nbits
        row = []
        for j in range(n):
            x = left | j
            entry = 0
            for t in range(nbits):
                entry = (entry << 1) | table[(x >> (nbits - 1 - t)) & mask]
            row.append(entry)
        rows.append(tuple(row))
    return LatinSquare(n, tuple(rows))


def is_latin(square: LatinSquare) -> bool:
    """Whether every row and every column is a permutation of {0, .., N-1}."""
    n = square.order
    full = list(range(n))
    for row in square.entries:
        if sorted(row) != full:
            return False
    for col in zip(*square.entries):
        if sorted(col) != full:
            return False
    return True


def are_orthogonal(first: LatinSquare, second: LatinSquare) -> bool:
    """Whether superposing the two squares yields all N^2 ordered pairs."""
    n = first.order
    if second.order != n:
        raise ValueError(f"orders differ: {n} vs {second.order}")
    seen = set()
    add = seen.add
    for row1, row2 in zip(first.entries, second.entries):
        for e1, e2 in zip(row1, row2):
            key = e1 * n + e2
            if key in seen:
                return False
            add(key)
    return True
