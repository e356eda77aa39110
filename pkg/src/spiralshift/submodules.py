"""Exhaustive census of T-stable subspaces of a truncated power-series module.

The ambient object is (F_q[T]/T^N)^d, an F_q-space of dimension d*N whose
coordinates are indexed by the monomials T^a u_i.  A monomial is reused as a
cylinder slot: seat i, level a.  Multiplying by T pushes levels up by one
and drops the top level.  Subspaces closed under that shift correspond
exactly to the finite-colength submodules of the untruncated module that
contain T^N times everything, so enumerating them is an oracle for
submodule counts by colength up to N.

Two monomial orders are used: the height order (level, then seat), whose
reduced echelon bases are the canonical identity of a submodule and whose
per-seat pivot profile is the leading-term stratum label, and the
seat-major order (seat, then level), under which the strata are the
diagonals of the lower-triangular generator matrices enumerated by
`hermite_strata`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator

from .cylinder import (
    Config,
    InternalInvariantError,
    Slot,
    compositions,
    slot_from_index,
    slot_index,
)

HLEX = "hlex"
LEX = "lex"

DEFAULT_CAP = 2**20


class FeasibilityError(Exception):
    """An enumeration request exceeded the configured ambient-size cap."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    p = 2
    while p * p <= n:
        if n % p == 0:
            return False
        p += 1
    return True


@dataclass(frozen=True)
class PrimeField:
    """Arithmetic modulo a prime; values are plain ints in [0, q)."""

    q: int

    def __post_init__(self) -> None:
        if not is_prime(self.q):
            raise ValueError(f"modulus must be prime, got {self.q}")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.q

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.q

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.q

    def neg(self, a: int) -> int:
        return -a % self.q

    def inv(self, a: int) -> int:
        if a % self.q == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.q)


def hlex_key(slot: Slot) -> tuple[int, int]:
    return (slot.level, slot.seat)


def lex_key(slot: Slot) -> tuple[int, int]:
    return (slot.seat, slot.level)


@dataclass(frozen=True)
class ModuleSpace:
    """The window (F_q[T]/T^depth)^d as a flat coefficient space.

    Vectors are tuples of length d*depth; the coefficient of T^a u_i sits at
    flat position a*d + i - 1, so flat order is the height order.
    """

    q: int
    d: int
    depth: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "field", PrimeField(self.q))
        if self.d < 1:
            raise ValueError("width d must be positive")
        if self.depth < 1:
            raise ValueError("depth must be positive")

    @property
    def dim(self) -> int:
        return self.d * self.depth

    def index_of(self, slot: Slot) -> int:
        if slot.level >= self.depth:
            raise ValueError(f"level {slot.level} outside window of depth {self.depth}")
        return slot_index(slot, self.d)

    def slot_of(self, index: int) -> Slot:
        if not 0 <= index < self.dim:
            raise ValueError(f"flat index {index} outside window")
        return slot_from_index(index, self.d)

    def scan_order(self, order: str) -> tuple[int, ...]:
        """Flat positions listed from lowest monomial up, in the given order."""
        if order == HLEX:
            return tuple(range(self.dim))
        if order == LEX:
            return tuple(sorted(range(self.dim), key=lambda p: lex_key(self.slot_of(p))))
        raise ValueError(f"unknown monomial order {order!r}")

    def zero_vector(self) -> tuple[int, ...]:
        return (0,) * self.dim

    def monomial_vector(self, slot: Slot) -> tuple[int, ...]:
        vec = [0] * self.dim
        vec[self.index_of(slot)] = 1
        return tuple(vec)

    def mul_by_t(self, vec: tuple[int, ...]) -> tuple[int, ...]:
        """Shift every seat one level up; the top level falls off."""
        out = [0] * self.dim
        for pos in range(self.dim - self.d):
            out[pos + self.d] = vec[pos]
        return tuple(out)


def echelonize(
    space: ModuleSpace, vectors: Iterable[tuple[int, ...]], order: str = HLEX
) -> tuple[tuple[int, ...], ...]:
    """Reduced echelon basis of the span, canonical for the given order.

    Each row's pivot is its lowest nonzero monomial; pivots are normalized
    to 1 and cleared from every other row.  Rows come back sorted by pivot.
    """
    q = space.q
    seq = space.scan_order(order)
    pivots: dict[int, list[int]] = {}
    for vec in vectors:
        v = list(vec)
        for rank in sorted(pivots):
            c = v[seq[rank]]
            if c:
                row = pivots[rank]
                v = [(a - c * b) % q for a, b in zip(v, row)]
        lead = next((rank for rank in range(space.dim) if v[seq[rank]]), None)
        if lead is None:
            continue
        inv = pow(v[seq[lead]], -1, q)
        v = [(a * inv) % q for a in v]
        for rank, row in pivots.items():
            c = row[seq[lead]]
            if c:
                pivots[rank] = [(a - c * b) % q for a, b in zip(row, v)]
        pivots[lead] = v
    return tuple(tuple(pivots[rank]) for rank in sorted(pivots))


def _reduce(
    space: ModuleSpace,
    rows: tuple[tuple[int, ...], ...],
    pivot_positions: tuple[int, ...],
    vec: tuple[int, ...],
) -> tuple[int, ...]:
    """Remainder of vec modulo a reduced echelon basis."""
    q = space.q
    v = list(vec)
    for row, p in zip(rows, pivot_positions):
        c = v[p]
        if c:
            v = [(a - c * b) % q for a, b in zip(v, row)]
    return tuple(v)


@dataclass(frozen=True)
class SubmoduleBasis:
    """Canonical reduced echelon basis of a subspace of a module window."""

    space: ModuleSpace
    order: str
    rows: tuple[tuple[int, ...], ...]

    @classmethod
    def from_vectors(
        cls, space: ModuleSpace, vectors: Iterable[tuple[int, ...]], order: str = HLEX
    ) -> "SubmoduleBasis":
        return cls(space, order, echelonize(space, vectors, order))

    @property
    def codim(self) -> int:
        return self.space.dim - len(self.rows)

    def pivot_positions(self) -> tuple[int, ...]:
        seq = self.space.scan_order(self.order)
        return tuple(
            seq[next(rank for rank in range(self.space.dim) if row[seq[rank]])]
            for row in self.rows
        )

    def pivot_slots(self) -> tuple[Slot, ...]:
        return tuple(self.space.slot_of(p) for p in self.pivot_positions())

    def contains(self, vec: tuple[int, ...]) -> bool:
        remainder = _reduce(self.space, self.rows, self.pivot_positions(), vec)
        return not any(remainder)

    def is_t_stable(self) -> bool:
        return all(self.contains(self.space.mul_by_t(row)) for row in self.rows)


def pivot_profile(m: SubmoduleBasis, order: str = HLEX) -> tuple[int, ...]:
    """Per seat, the least pivot level of the basis in `order` (depth if none)."""
    space = m.space
    rows = m.rows if m.order == order else echelonize(space, m.rows, order)
    seq = space.scan_order(order)
    lows = [space.depth] * space.d
    for row in rows:
        slot = space.slot_of(seq[next(r for r in range(space.dim) if row[seq[r]])])
        lows[slot.seat - 1] = min(lows[slot.seat - 1], slot.level)
    return tuple(lows)


def leading_module(m: SubmoduleBasis) -> Config:
    """Leading-term stratum label of a T-stable subspace.

    Seat i carries the least height-order pivot level, or the full depth
    when the seat has no pivot.  Only meaningful while no leading data is
    truncated away, i.e. when the colength is at most the depth.
    """
    if m.codim > m.space.depth:
        raise ValueError(
            f"colength {m.codim} exceeds window depth {m.space.depth}; deepen the window"
        )
    return Config(pivot_profile(m, HLEX))


def _check_cap(q: int, d: int, depth: int, cap: int) -> None:
    if q ** (d * depth) > cap:
        raise FeasibilityError(
            f"ambient vector count {q}^{d * depth} exceeds the cap {cap}"
        )


def _echelon_candidates(
    space: ModuleSpace, pivot_positions: Iterable[int]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All reduced echelon row tuples with the given height-order pivots."""
    q = space.q
    pivots = sorted(pivot_positions)
    pivot_set = set(pivots)
    free = [[c for c in range(p + 1, space.dim) if c not in pivot_set] for p in pivots]
    total = sum(len(cells) for cells in free)
    for assign in itertools.product(range(q), repeat=total):
        rows = []
        k = 0
        for p, cells in zip(pivots, free):
            row = [0] * space.dim
            row[p] = 1
            for c in cells:
                row[c] = assign[k]
                k += 1
            rows.append(tuple(row))
        yield tuple(rows)


def _pivot_sets(space: ModuleSpace, prune: bool) -> Iterator[tuple[int, ...]]:
    if prune:
        # Multiplying by T pushes a vector's lowest monomial one level up in
        # the same seat, so the pivot levels of a T-stable subspace fill a
        # top range of levels in each seat.
        for profile in itertools.product(range(space.depth + 1), repeat=space.d):
            yield tuple(
                space.index_of(Slot(seat, level))
                for seat in range(1, space.d + 1)
                for level in range(profile[seat - 1], space.depth)
            )
    else:
        for k in range(space.dim + 1):
            yield from itertools.combinations(range(space.dim), k)


def enumerate_submodules(
    q: int, d: int, depth: int, cap: int = DEFAULT_CAP, prune: bool = True
) -> list[SubmoduleBasis]:
    """Every T-stable subspace of the width-d, depth-N window, canonical form.

    With prune=True only pivot profiles a T-stable subspace can carry are
    scanned; prune=False scans every pivot set of every size, which is the
    slow validation oracle for the smallest windows.  Output is sorted.
    """
    _check_cap(q, d, depth, cap)
    space = ModuleSpace(q, d, depth)
    found = []
    for pivot_positions in _pivot_sets(space, prune):
        for rows in _echelon_candidates(space, pivot_positions):
            basis = SubmoduleBasis(space, HLEX, rows)
            if basis.is_t_stable():
                found.append(basis)
    found.sort(key=lambda m: (m.codim, m.rows))
    return found


def count_by_colength(q: int, d: int, depth: int, cap: int = DEFAULT_CAP) -> list[int]:
    """Census totals: entry n counts the T-stable subspaces of colength n.

    Complete for n <= depth, since a colength-n submodule contains T^n times
    the ambient module and is therefore visible in the window.
    """
    counts = [0] * (depth + 1)
    for m in enumerate_submodules(q, d, depth, cap=cap):
        if m.codim <= depth:
            counts[m.codim] += 1
    return counts


def _module_closure(
    space: ModuleSpace, gens: Iterable[tuple[int, ...]]
) -> list[tuple[int, ...]]:
    """Spanning vectors of the submodule generated: every T-power of each gen."""
    vecs = []
    for g in gens:
        v = g
        for _ in range(space.depth):
            vecs.append(v)
            v = space.mul_by_t(v)
    return vecs


def enumerate_stratum(
    x: Config, q: int, depth: int | None = None, cap: int = DEFAULT_CAP
) -> list[SubmoduleBasis]:
    """All submodules whose leading-term profile is exactly x.

    One generator per seat: its leading monomial is seat i at level x_i, and
    its other coefficients range freely over exactly the monomials that sit
    strictly above the leading one while staying below their own seat's
    leading level.  The census tests pin the count to q**weight(x) and the
    output to the brute-force stratum.
    """
    colength = sum(x.levels)
    if depth is None:
        depth = colength + 1
    if depth < max(colength, 1):
        raise ValueError(f"window depth {depth} too shallow for colength {colength}")
    _check_cap(q, x.d, depth, cap)
    space = ModuleSpace(q, x.d, depth)
    leads = [Slot(i, n) for i, n in enumerate(x.levels, start=1)]
    free_cells = []
    for lead in leads:
        cells = [
            Slot(j, a)
            for j, nj in enumerate(x.levels, start=1)
            if j != lead.seat
            for a in range(nj)
            if hlex_key(Slot(j, a)) > hlex_key(lead)
        ]
        if lead.level >= depth and cells:
            # Unreachable: depth >= colength forces the cell list empty here.
            raise InternalInvariantError("free cells attached to a truncated leading monomial")
        free_cells.append(cells)
    total = sum(len(cells) for cells in free_cells)
    found = []
    for assign in itertools.product(range(q), repeat=total):
        gens = []
        k = 0
        for lead, cells in zip(leads, free_cells):
            vec = [0] * space.dim
            if lead.level < depth:
                vec[space.index_of(lead)] = 1
            for cell in cells:
                vec[space.index_of(cell)] = assign[k]
                k += 1
            gens.append(tuple(vec))
        found.append(SubmoduleBasis.from_vectors(space, _module_closure(space, gens)))
    found.sort(key=lambda m: (m.codim, m.rows))
    return found


def hermite_strata(
    q: int, d: int, colength: int, depth: int | None = None, cap: int = DEFAULT_CAP
) -> dict[tuple[int, ...], list[SubmoduleBasis]]:
    """Colength-n submodules grouped by lower-triangular generator matrices.

    Column j of a matrix is the generator T^{n_j} u_j plus, on each seat
    i > j, a polynomial of degree below n_i; the group for a diagonal
    (n_1, ..., n_d) has q ** (sum of n_i over below-diagonal cells) members.
    The census tests pin the groups to be disjoint and to cover the
    colength class exactly.
    """
    if depth is None:
        depth = max(colength, 1)
    if depth < max(colength, 1):
        raise ValueError(f"window depth {depth} too shallow for colength {colength}")
    _check_cap(q, d, depth, cap)
    space = ModuleSpace(q, d, depth)
    out: dict[tuple[int, ...], list[SubmoduleBasis]] = {}
    for diag in compositions(colength, d):
        cells = [
            (i, j, a)
            for j in range(1, d + 1)
            for i in range(j + 1, d + 1)
            for a in range(diag[i - 1])
        ]
        group = []
        for assign in itertools.product(range(q), repeat=len(cells)):
            cols = [[0] * space.dim for _ in range(d)]
            for j in range(1, d + 1):
                if diag[j - 1] < depth:
                    cols[j - 1][space.index_of(Slot(j, diag[j - 1]))] = 1
            for (i, j, a), c in zip(cells, assign):
                cols[j - 1][space.index_of(Slot(i, a))] = c
            gens = [tuple(col) for col in cols]
            group.append(SubmoduleBasis.from_vectors(space, _module_closure(space, gens)))
        group.sort(key=lambda m: (m.codim, m.rows))
        out[diag] = group
    return out


def hermite_enumerate(
    q: int, d: int, colength: int, depth: int | None = None, cap: int = DEFAULT_CAP
) -> list[SubmoduleBasis]:
    """All colength-n submodules via the triangular matrix normal form."""
    flat = [
        m
        for group in hermite_strata(q, d, colength, depth=depth, cap=cap).values()
        for m in group
    ]
    flat.sort(key=lambda m: (m.codim, m.rows))
    return flat
