"""Uniform clutters on a finite vertex set, stored as bit masks.

A d-uniform clutter on vertices 1..n is a set of d-element subsets,
called circuits.  Each circuit is held as an integer bit mask (vertex v
maps to bit v-1), which makes membership tests, deletions and
neighborhood computations cheap set arithmetic.  Masks are fixed-width
in spirit: vertex counts above MAX_VERTICES are rejected so that every
stored value fits one machine word on typical builds.

Vertex sets cross the public API as sorted tuples of 1-based ints; the
mask representation is an internal convention shared with the sibling
modules.
"""

from __future__ import annotations

import itertools
from collections.abc import Iterable
from dataclasses import dataclass
from math import comb

MAX_VERTICES = 64

Vertices = tuple[int, ...]


# ----- mask helpers -------------------------------------------------------


def mask_of(vertices: Iterable[int]) -> int:
    """Bit mask of a vertex collection (1-based vertices)."""
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def verts_of(mask: int) -> Vertices:
    """Sorted vertex tuple of a bit mask."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def iter_masks_of_size(universe_mask: int, k: int):
    """All k-element submasks of universe_mask."""
    verts = verts_of(universe_mask)
    for combo in itertools.combinations(verts, k):
        yield mask_of(combo)


# ----- value types --------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Clutter:
    """A d-uniform clutter on [n], circuits in canonical order.

    circuit_masks is sorted by the lexicographic order of the sorted
    vertex tuples, so equal clutters compare and hash equal and every
    iteration over circuits is deterministic.
    """

    n: int
    d: int
    circuit_masks: tuple[int, ...]

    @property
    def circuits(self) -> tuple[Vertices, ...]:
        return tuple(verts_of(m) for m in self.circuit_masks)

    @property
    def num_circuits(self) -> int:
        return len(self.circuit_masks)

    def mask_set(self) -> frozenset[int]:
        return frozenset(self.circuit_masks)

    def __repr__(self) -> str:
        body = ",".join("".join(map(str, c)) if self.n <= 9 else str(c)
                        for c in self.circuits)
        return f"Clutter(n={self.n}, d={self.d}, {{{body}}})"


@dataclass(frozen=True, slots=True)
class SquarefreeIdeal:
    """A squarefree monomial ideal given by its minimal generators.

    Generators are vertex subsets of [n] in the same canonical mask
    order used for circuits.  They always form an antichain under
    inclusion; make_ideal discards non-minimal input monomials.
    """

    n: int
    gen_masks: tuple[int, ...]

    @property
    def gens(self) -> tuple[Vertices, ...]:
        return tuple(verts_of(m) for m in self.gen_masks)

    @property
    def num_gens(self) -> int:
        return len(self.gen_masks)

    @property
    def degree(self) -> int | None:
        """Common generator degree when equigenerated, else None."""
        sizes = {m.bit_count() for m in self.gen_masks}
        return sizes.pop() if len(sizes) == 1 else None

    def contains(self, vertices: Iterable[int]) -> bool:
        """Monomial membership: some generator divides the monomial."""
        m = mask_of(vertices)
        return any(g & m == g for g in self.gen_masks)

    def __repr__(self) -> str:
        body = ",".join("".join(map(str, g)) if self.n <= 9 else str(g)
                        for g in self.gens)
        return f"SquarefreeIdeal(n={self.n}, ({body}))"


def canonical_mask_order(masks: Iterable[int]) -> tuple[int, ...]:
    """Deduplicate and sort masks by their sorted vertex tuples."""
    return tuple(sorted(set(masks), key=verts_of))


# ----- constructors -------------------------------------------------------


def _check_vertex_range(n: int, vertices: Iterable[int]) -> None:
    for v in vertices:
        if not isinstance(v, int) or not 1 <= v <= n:
            raise ValueError(f"vertex {v!r} out of range 1..{n}")


def make_clutter(n: int, d: int, circuits: Iterable[Iterable[int]]) -> Clutter:
    """Build a d-uniform clutter on [n] from vertex collections.

    Duplicate circuits collapse.  When n < d the only legal clutter is
    the empty one.  Raises ValueError for non-positive parameters,
    vertices outside 1..n, circuits of the wrong cardinality, or
    n > MAX_VERTICES.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"positive vertex count expected, got {n!r}")
    if n > MAX_VERTICES:
        raise ValueError(
            f"n={n} exceeds the supported maximum of {MAX_VERTICES} vertices")
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"positive uniformity expected, got {d!r}")
    masks = []
    for circ in circuits:
        vs = tuple(circ)
        _check_vertex_range(n, vs)
        m = mask_of(vs)
        if m.bit_count() != d:
            raise ValueError(
                f"circuit {sorted(set(vs))} has {m.bit_count()} vertices, expected {d}")
        masks.append(m)
    if n < d and masks:
        raise ValueError(f"no {d}-subsets exist on {n} vertices")
    return Clutter(n, d, canonical_mask_order(masks))


def clutter_from_masks(n: int, d: int, masks: Iterable[int]) -> Clutter:
    """Internal fast path: masks are trusted to be d-subsets of [n]."""
    return Clutter(n, d, canonical_mask_order(masks))


def make_ideal(n: int, gens: Iterable[Iterable[int]]) -> SquarefreeIdeal:
    """Build a squarefree ideal, reducing the input to minimal generators."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"positive vertex count expected, got {n!r}")
    if n > MAX_VERTICES:
        raise ValueError(
            f"n={n} exceeds the supported maximum of {MAX_VERTICES} vertices")
    masks = set()
    for g in gens:
        vs = tuple(g)
        _check_vertex_range(n, vs)
        if not vs:
            raise ValueError("the unit ideal (empty generator) is not supported")
        masks.add(mask_of(vs))
    minimal = [m for m in masks
               if not any(o != m and o & m == o for o in masks)]
    return SquarefreeIdeal(n, canonical_mask_order(minimal))


def ideal_from_masks(n: int, masks: Iterable[int]) -> SquarefreeIdeal:
    """Internal fast path: masks are trusted to form an antichain."""
    return SquarefreeIdeal(n, canonical_mask_order(masks))


def complete_clutter(n: int, d: int) -> Clutter:
    """All d-subsets of [n] (empty when n < d)."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"positive vertex count expected, got {n!r}")
    if n > MAX_VERTICES:
        raise ValueError(
            f"n={n} exceeds the supported maximum of {MAX_VERTICES} vertices")
    if not isinstance(d, int) or d < 1:
        raise ValueError(f"positive uniformity expected, got {d!r}")
    if n < d:
        return Clutter(n, d, ())
    masks = (mask_of(c) for c in itertools.combinations(range(1, n + 1), d))
    return Clutter(n, d, canonical_mask_order(masks))


# ----- core operations ----------------------------------------------------


def complement(clutter: Clutter) -> Clutter:
    """The d-subsets of [n] that are not circuits.  Needs n >= d."""
    if clutter.n < clutter.d:
        raise ValueError(
            f"complement needs n >= d, got n={clutter.n}, d={clutter.d}")
    have = clutter.mask_set()
    masks = [mask_of(c)
             for c in itertools.combinations(range(1, clutter.n + 1), clutter.d)]
    return Clutter(clutter.n, clutter.d,
                   canonical_mask_order(m for m in masks if m not in have))


def submaximal_circuit_masks(circuit_masks: Iterable[int]) -> set[int]:
    """Masks of (d-1)-subsets contained in some circuit."""
    out = set()
    for m in circuit_masks:
        rest = m
        while rest:
            low = rest & -rest
            out.add(m ^ low)
            rest ^= low
    return out


def submaximal_circuits(clutter: Clutter) -> frozenset[Vertices]:
    """All (d-1)-subsets contained in at least one circuit."""
    return frozenset(
        verts_of(m) for m in submaximal_circuit_masks(clutter.circuit_masks))


def neighborhood_map(circuit_masks: Iterable[int]) -> dict[int, int]:
    """Map each submaximal mask e to the mask of its open neighborhood.

    c is a neighbor of e exactly when e plus c is a circuit.
    """
    nbrs: dict[int, int] = {}
    for m in circuit_masks:
        rest = m
        while rest:
            low = rest & -rest
            e = m ^ low
            nbrs[e] = nbrs.get(e, 0) | low
            rest ^= low
    return nbrs


def open_neighborhood(clutter: Clutter, e: Iterable[int]) -> Vertices:
    """Vertices c with e + {c} a circuit, for a (d-1)-set e."""
    evs = tuple(e)
    _check_vertex_range(clutter.n, evs)
    emask = mask_of(evs)
    if emask.bit_count() != clutter.d - 1:
        raise ValueError(
            f"open_neighborhood expects a {clutter.d - 1}-subset, got {sorted(set(evs))}")
    nbr = 0
    for m in clutter.circuit_masks:
        if m & emask == emask:
            nbr |= m ^ emask
    return verts_of(nbr)


def closed_neighborhood(clutter: Clutter, e: Iterable[int]) -> Vertices:
    """e together with its open neighborhood."""
    evs = tuple(e)
    return tuple(sorted(set(evs) | set(open_neighborhood(clutter, evs))))


def mask_is_clique(circuit_set: frozenset[int] | set[int], vmask: int, d: int) -> bool:
    """Clique test on masks: every d-subset of vmask is a circuit.

    Sets with fewer than d vertices are cliques vacuously.
    """
    if vmask.bit_count() < d:
        return True
    for sub in itertools.combinations(verts_of(vmask), d):
        if mask_of(sub) not in circuit_set:
            return False
    return True


def is_clique(clutter: Clutter, vertices: Iterable[int]) -> bool:
    """True when every d-subset of the given vertices is a circuit."""
    vs = tuple(vertices)
    _check_vertex_range(clutter.n, vs)
    return mask_is_clique(clutter.mask_set(), mask_of(vs), clutter.d)


def delete(clutter: Clutter, e: Iterable[int]) -> Clutter:
    """Remove every circuit containing the (d-1)-set e."""
    evs = tuple(e)
    _check_vertex_range(clutter.n, evs)
    emask = mask_of(evs)
    if emask.bit_count() != clutter.d - 1:
        raise ValueError(
            f"delete expects a {clutter.d - 1}-subset, got {sorted(set(evs))}")
    kept = tuple(m for m in clutter.circuit_masks if m & emask != emask)
    return Clutter(clutter.n, clutter.d, kept)


def circuit_ideal(clutter: Clutter) -> SquarefreeIdeal:
    """The squarefree ideal generated by the non-circuits of [n].

    This is the Stanley-Reisner ideal of the clique complex: its
    generators are exactly the complement's circuits, so it is
    equigenerated in degree d (and zero for the complete clutter).
    """
    comp = complement(clutter)
    return SquarefreeIdeal(clutter.n, comp.circuit_masks)


def num_d_subsets(n: int, d: int) -> int:
    return comb(n, d) if n >= d else 0
