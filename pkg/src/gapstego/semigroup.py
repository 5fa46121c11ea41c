"""Numerical semigroups: construction, membership, gaps, structure tests.

A numerical semigroup S is the set of all non-negative integer combinations
of finitely many generators whose gcd is 1.  Cofinitely many integers belong
to S; the missing ones are the gaps.  The largest gap is the Frobenius
number F, the number of gaps is the genus g.

All queries go through a table of per-residue minima: with m the smallest
generator, min_rep[r] is the least member of S congruent to r mod m, and

    x in S  <=>  x >= min_rep[x % m].

The table is computed once by Dijkstra's algorithm on a graph whose
vertices are the residues mod m and whose edges r -> (r + a) % m have
weight a for each generator a.  The distance from vertex 0 to r is exactly
min_rep[r].
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    ElementOneError,
    EmptySetError,
    GcdNotOneError,
    LimitError,
    NegativeInputError,
    NonPositiveElementError,
)

# build_table allocates one int64 per residue class mod the multiplicity,
# and path weights must stay far from 2**63: m * max_generator is an upper
# bound on any distance, so these two caps keep everything in range.
MAX_MULTIPLICITY = 10**7
MAX_GENERATOR = 2**31


@dataclass(frozen=True)
class GeneratingSet:
    """Validated generator tuple: strictly increasing, all >= 2, gcd 1.

    Instances come from validate_generators(); building one directly skips
    validation and is only appropriate for already-canonical data.
    """

    elements: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __getitem__(self, i: int) -> int:
        return self.elements[i]


def validate_generators(raw: Iterable[int]) -> GeneratingSet:
    """Canonicalize a raw generator collection: sort, deduplicate, validate.

    Raises EmptySetError, NonPositiveElementError, ElementOneError or
    GcdNotOneError when the input cannot generate a numerical semigroup
    with gaps.
    """
    elems = sorted({int(x) for x in raw})
    if not elems:
        raise EmptySetError("no generators given")
    if elems[0] <= 0:
        raise NonPositiveElementError(f"generators must be positive, got {elems[0]}")
    if elems[0] == 1:
        raise ElementOneError("1 as a generator leaves no gaps to encode into")
    g = math.gcd(*elems)
    if g != 1:
        raise GcdNotOneError(g)
    return GeneratingSet(tuple(elems))


@dataclass(frozen=True, eq=False)
class SemigroupTable:
    """Per-residue minima of a numerical semigroup plus derived constants.

    min_rep has one entry per residue class mod the multiplicity and is
    marked read-only.  Equality is identity; compare fields explicitly.
    """

    generators: GeneratingSet
    multiplicity: int
    min_rep: np.ndarray
    frobenius: int
    genus: int

    def is_member(self, x: int) -> bool:
        """Decide x in S in O(1)."""
        if x < 0:
            raise NegativeInputError(f"membership is defined for x >= 0, got {x}")
        return x >= int(self.min_rep[x % self.multiplicity])

    def members(self, xs: Sequence[int] | np.ndarray) -> np.ndarray:
        """Vectorized membership: boolean array for non-negative int64 input."""
        arr = np.asarray(xs, dtype=np.int64)
        if arr.size and int(arr.min()) < 0:
            raise NegativeInputError("membership is defined for x >= 0")
        return arr >= self.min_rep[arr % self.multiplicity]

    def gaps(self) -> np.ndarray:
        """All gaps in increasing order; the length equals the genus.

        The gaps congruent to r mod m are r, r + m, ..., min_rep[r] - m,
        so the whole list costs O(genus) to produce.
        """
        m = self.multiplicity
        pieces = [
            np.arange(r, int(top), m, dtype=np.int64)
            for r, top in enumerate(self.min_rep)
        ]
        out = np.concatenate(pieces)
        out.sort()
        return out

    def is_symmetric(self) -> bool:
        """True when the gaps fill exactly half of [0, F].

        Symmetry (z in S <=> F - z not in S) is equivalent to the count
        identity 2 * genus == frobenius + 1, which is what gets checked.
        """
        return 2 * self.genus == self.frobenius + 1


def build_table(gens: GeneratingSet) -> SemigroupTable:
    """Shortest-path construction of the per-residue minima.

    Only the smallest generator in each residue class mod m is kept as an
    edge: a larger one congruent to it differs by a multiple of m and can
    never relax a distance the smaller one cannot.
    """
    elems = gens.elements
    m = elems[0]
    if m > MAX_MULTIPLICITY:
        raise LimitError(f"multiplicity {m} exceeds the table limit {MAX_MULTIPLICITY}")
    if elems[-1] > MAX_GENERATOR:
        raise LimitError(f"generator {elems[-1]} exceeds the limit {MAX_GENERATOR}")

    edge_for: dict[int, int] = {}
    for a in elems[1:]:
        r = a % m
        if r and r not in edge_for:
            edge_for[r] = a
    edges = sorted(edge_for.values())

    unreached = 2**63 - 1
    dist = [unreached] * m
    dist[0] = 0
    heap: list[tuple[int, int]] = [(0, 0)]
    push = heapq.heappush
    pop = heapq.heappop
    while heap:
        d, r = pop(heap)
        if d > dist[r]:
            continue
        for a in edges:
            nd = d + a
            nr = nd % m
            if nd < dist[nr]:
                dist[nr] = nd
                push(heap, (nd, nr))

    min_rep = np.array(dist, dtype=np.int64)
    min_rep.setflags(write=False)
    frobenius = int(min_rep.max()) - m
    genus = int((min_rep // m).sum())
    return SemigroupTable(gens, m, min_rep, frobenius, genus)


def _monoid_contains(scaled: Sequence[int], x: int) -> bool:
    # membership of x in the monoid generated by `scaled` (gcd must be 1);
    # a scaled generator of 1 means the monoid is all of N
    if x == 0:
        return True
    if 1 in scaled:
        return True
    return build_table(validate_generators(scaled)).is_member(x)


def is_telescopic(gens: GeneratingSet) -> bool:
    """Test the telescopic condition on the increasing generator sequence.

    With d_i the gcd of the first i elements, the sequence is telescopic
    when every quotient a_i / d_i is generated by the prefix divided by
    d_{i-1}.  (The variant without the prefix scaling already rejects
    (4, 6, 9), which any workable definition must accept.)  Telescopic
    sequences always generate symmetric semigroups.
    """
    elems = gens.elements
    d_prev = elems[0]
    for i in range(1, len(elems)):
        d_i = math.gcd(d_prev, elems[i])
        scaled_prefix = tuple(a // d_prev for a in elems[:i])
        if not _monoid_contains(scaled_prefix, elems[i] // d_i):
            return False
        d_prev = d_i
    return True


def minimal_generators(gens: GeneratingSet) -> GeneratingSet:
    """Drop every generator that the remaining ones already produce.

    The survivors form the unique minimal generating set of the same
    semigroup; their count is the embedding dimension.
    """
    elems = gens.elements
    keep = []
    for i, a in enumerate(elems):
        others = elems[:i] + elems[i + 1 :]
        g = math.gcd(*others)
        if a % g:
            keep.append(a)
            continue
        if not _monoid_contains(tuple(o // g for o in others), a // g):
            keep.append(a)
    return GeneratingSet(tuple(keep))


@dataclass(frozen=True, eq=False)
class MembershipSieve:
    """Plain boolean table of representable numbers on [0, bound]."""

    bound: int
    representable: np.ndarray

    def is_member(self, x: int) -> bool:
        if x < 0:
            raise NegativeInputError(f"membership is defined for x >= 0, got {x}")
        if x > self.bound:
            raise ValueError(f"sieve covers [0, {self.bound}], got {x}")
        return bool(self.representable[x])


def brute_force_sieve(gens: GeneratingSet, bound: int) -> MembershipSieve:
    """Mark every sum of generators up to bound by direct dynamic programming.

    Kept deliberately independent of build_table so the two can referee
    each other: the array is closed under adding each generator via
    doubling shifts (a, 2a, 4a, ...), which reaches every multiple of a
    up to the bound.
    """
    if bound < 0:
        raise NegativeInputError(f"bound must be >= 0, got {bound}")
    rep = np.zeros(bound + 1, dtype=bool)
    rep[0] = True
    for a in gens:
        step = int(a)
        while step <= bound:
            rep[step:] |= rep[:-step].copy()
            step *= 2
    rep.setflags(write=False)
    return MembershipSieve(bound, rep)
