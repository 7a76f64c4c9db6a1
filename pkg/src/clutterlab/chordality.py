"""Simplicial orders and chordality of uniform clutters.

A (d-1)-subset e of a circuit is *simplicial* when its closed
neighborhood N[e] = e + {c : e+{c} is a circuit} is a clique.  A
clutter is *chordal* when it is empty or some simplicial e exists whose
deletion leaves a chordal clutter.  A complete run of such deletions is
a *simplicial order*; the multiset of open-neighborhood sizes recorded
along the way does not depend on the order chosen, which is what makes
it (and the lambda-sequence derived from it) an invariant worth
computing.

The decision procedure is a depth-first search over deletion states
with two standing rules:

* candidates are tried in lexicographic order of their vertex tuples,
  so the returned witness is deterministic;
* states from which no completion exists are memoized by their circuit
  set, so the search never re-explores a failed region.

Greedy deletion (always take the first simplicial element) is exposed
separately as a fast path.  A stuck greedy run proves nothing: no
result of this module treats "greedy failed" as "not chordal".
"""

from __future__ import annotations

from collections import Counter
from collections.abc import Iterable
from dataclasses import dataclass

from .clutter import (
    Clutter,
    Vertices,
    complete_clutter,
    mask_is_clique,
    mask_of,
    neighborhood_map,
    verts_of,
)

Multiset = Counter
LambdaSequence = tuple[int, ...]


class SearchLimitReached(RuntimeError):
    """The configured state budget ran out before an answer was proved.

    Catching this means the chordality question is still open for the
    input; it must not be reported as "not chordal".
    """


@dataclass(frozen=True, slots=True)
class SimplicialOrder:
    """A complete simplicial order: (element, open-neighborhood size) steps."""

    steps: tuple[tuple[Vertices, int], ...]

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def elements(self) -> tuple[Vertices, ...]:
        return tuple(e for e, _ in self.steps)

    @property
    def neighborhood_sizes(self) -> tuple[int, ...]:
        return tuple(s for _, s in self.steps)


# ----- simplicial elements -------------------------------------------------


def _simplicial_candidates(state: frozenset[int], d: int) -> list[tuple[int, int]]:
    """(element mask, neighborhood mask) pairs, lex sorted by vertex tuple."""
    out = []
    for e, nbr in neighborhood_map(state).items():
        if mask_is_clique(state, e | nbr, d):
            out.append((e, nbr))
    out.sort(key=lambda pair: verts_of(pair[0]))
    return out


def simplicial_elements(clutter: Clutter) -> frozenset[Vertices]:
    """All simplicial (d-1)-subsets of the clutter."""
    state = clutter.mask_set()
    return frozenset(
        verts_of(e) for e, _ in _simplicial_candidates(state, clutter.d))


def _delete_mask(state: frozenset[int], emask: int) -> frozenset[int]:
    return frozenset(m for m in state if m & emask != emask)


# ----- full decision procedure ---------------------------------------------


def find_simplicial_order(clutter: Clutter,
                          max_states: int | None = None) -> SimplicialOrder | None:
    """Decide chordality, returning a witness order or None.

    None is a definitive negative: the backtracking search exhausted
    every deletion sequence.  With max_states set, the search raises
    SearchLimitReached once that many distinct states have been
    expanded, leaving the question open.
    """
    d = clutter.d
    failed: set[frozenset[int]] = set()
    expanded = 0

    def search(state: frozenset[int]) -> list[tuple[int, int]] | None:
        nonlocal expanded
        if not state:
            return []
        if state in failed:
            return None
        if max_states is not None:
            if expanded >= max_states:
                raise SearchLimitReached(
                    f"no answer after expanding {expanded} states")
            expanded += 1
        for emask, nbr in _simplicial_candidates(state, d):
            tail = search(_delete_mask(state, emask))
            if tail is not None:
                return [(emask, nbr.bit_count())] + tail
        failed.add(state)
        return None

    steps = search(clutter.mask_set())
    if steps is None:
        return None
    return SimplicialOrder(tuple((verts_of(e), s) for e, s in steps))


def is_chordal(clutter: Clutter, max_states: int | None = None) -> bool:
    return find_simplicial_order(clutter, max_states) is not None


def greedy_simplicial_order(clutter: Clutter) -> SimplicialOrder | None:
    """Repeatedly delete the lex-first simplicial element.

    Returns None when stuck.  A stuck run is not evidence against
    chordality; use find_simplicial_order for an actual decision.
    """
    d = clutter.d
    state = clutter.mask_set()
    steps = []
    while state:
        cands = _simplicial_candidates(state, d)
        if not cands:
            return None
        emask, nbr = cands[0]
        steps.append((verts_of(emask), nbr.bit_count()))
        state = _delete_mask(state, emask)
    return SimplicialOrder(tuple(steps))


def enumerate_simplicial_orders(clutter: Clutter,
                                limit: int = 100_000,
                                max_submaximal: int = 24) -> list[SimplicialOrder]:
    """Every complete simplicial order, up to limit.

    Guarded by the number of submaximal circuits, since the order count
    can grow factorially.  Branches that provably cannot complete are
    pruned through the same failed-state memo as the decision search.
    """
    d = clutter.d
    start = clutter.mask_set()
    n_sub = len(neighborhood_map(start))
    if n_sub > max_submaximal:
        raise ValueError(
            f"{n_sub} submaximal circuits exceed the enumeration guard "
            f"of {max_submaximal}; raise max_submaximal to proceed")
    failed: set[frozenset[int]] = set()
    orders: list[SimplicialOrder] = []
    prefix: list[tuple[Vertices, int]] = []

    def walk(state: frozenset[int]) -> bool:
        """Extend prefix in all ways; True when any completion exists."""
        if not state:
            orders.append(SimplicialOrder(tuple(prefix)))
            return True
        if state in failed:
            return False
        any_done = False
        for emask, nbr in _simplicial_candidates(state, d):
            if len(orders) >= limit:
                break
            prefix.append((verts_of(emask), nbr.bit_count()))
            if walk(_delete_mask(state, emask)):
                any_done = True
            prefix.pop()
        if not any_done:
            failed.add(state)
        return any_done

    walk(start)
    return orders


# ----- witness replay -------------------------------------------------------


def replay_order(clutter: Clutter,
                 elements: Iterable[Vertices]) -> tuple[int, ...]:
    """Re-run a sequence of deletions, checking each step is simplicial.

    Returns the open-neighborhood sizes seen along the way.  Raises
    ValueError on the first non-simplicial element or when circuits
    remain at the end, so a successful replay certifies a witness.
    """
    d = clutter.d
    state = clutter.mask_set()
    sizes = []
    for e in elements:
        emask = mask_of(e)
        if emask.bit_count() != d - 1:
            raise ValueError(f"{tuple(e)} is not a {d - 1}-subset")
        nbr = 0
        for m in state:
            if m & emask == emask:
                nbr |= m ^ emask
        if nbr == 0:
            raise ValueError(f"{tuple(e)} is not submaximal at its step")
        if not mask_is_clique(state, emask | nbr, d):
            raise ValueError(f"{tuple(e)} is not simplicial at its step")
        sizes.append(nbr.bit_count())
        state = _delete_mask(state, emask)
    if state:
        raise ValueError(f"{len(state)} circuits remain after the sequence")
    return tuple(sizes)


# ----- derived invariants ----------------------------------------------------


def simplicial_multiset(order: SimplicialOrder) -> Multiset:
    """Multiset of open-neighborhood sizes of a complete order."""
    return Counter(order.neighborhood_sizes)


def lambda_sequence(multiset: Multiset | Iterable[int]) -> LambdaSequence:
    """lambda_i = multiplicity of i in the multiset, trailing zeros trimmed.

    Entries are 1-indexed: the returned tuple lists lambda_1 onward.
    """
    counts = Counter(multiset)
    if any(v < 1 for v in counts):
        raise ValueError("neighborhood sizes must be positive integers")
    if not counts:
        return ()
    top = max(counts)
    seq = [counts.get(i, 0) for i in range(1, top + 1)]
    return tuple(seq)


def multiset_from_lambda(lam: Iterable[int]) -> Multiset:
    """Inverse of lambda_sequence: value i with multiplicity lambda_i."""
    ms: Multiset = Counter()
    for i, mult in enumerate(lam, start=1):
        if mult < 0:
            raise ValueError("multiplicities must be non-negative")
        if mult:
            ms[i] = mult
    return ms


def lambda_of(clutter: Clutter, max_states: int | None = None) -> LambdaSequence | None:
    """Convenience: lambda-sequence via the decision search, None if not chordal."""
    order = find_simplicial_order(clutter, max_states)
    if order is None:
        return None
    return lambda_sequence(simplicial_multiset(order))


# ----- co-chordality ---------------------------------------------------------


def co_chordal_sequence(clutter: Clutter,
                        max_states: int | None = None) -> tuple[Vertices, ...] | None:
    """A simplicial sequence carving the complete clutter down to this one.

    Searches for e_1, ..., e_r, each simplicial in the running deletion
    of the complete d-uniform clutter on [n], whose deletions remove
    exactly the complement's circuits.  Returns the sequence (empty for
    the complete clutter itself) or None when no such sequence exists.

    Chordality and co-chordality are logically independent here: one is
    never inferred from the other.
    """
    if clutter.n < clutter.d:
        return () if not clutter.circuit_masks else None
    target = clutter.mask_set()
    d = clutter.d
    failed: set[frozenset[int]] = set()
    expanded = 0

    def search(state: frozenset[int]) -> list[int] | None:
        nonlocal expanded
        if state == target:
            return []
        if state in failed:
            return None
        if max_states is not None:
            if expanded >= max_states:
                raise SearchLimitReached(
                    f"no answer after expanding {expanded} states")
            expanded += 1
        for emask, _nbr in _simplicial_candidates(state, d):
            # Deleting emask removes every circuit containing it; legal
            # only when none of those circuits belongs to the target.
            if any(m & emask == emask for m in target):
                continue
            tail = search(_delete_mask(state, emask))
            if tail is not None:
                return [emask] + tail
        failed.add(state)
        return None

    start = complete_clutter(clutter.n, clutter.d).mask_set()
    seq = search(start)
    if seq is None:
        return None
    return tuple(verts_of(e) for e in seq)


def is_co_chordal(clutter: Clutter, max_states: int | None = None) -> bool:
    return co_chordal_sequence(clutter, max_states) is not None
