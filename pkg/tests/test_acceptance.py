"""Acceptance suite: one criterion per test, one PASS/FAIL line each.

Run with `pytest tests/test_acceptance.py -s` to see the lines as they
complete.  Each criterion also enforces its wall-clock budget.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from functools import lru_cache
from itertools import combinations
from math import comb

import networkx as nx

from clutterlab import (
    alpha_sequence,
    betti_from_multiset,
    circuit_ideal,
    complement,
    complete_clutter,
    complete_lambda,
    enumerate_simplicial_orders,
    extremal_clutter,
    f_vector_direct,
    f_vector_from_multiset,
    find_simplicial_order,
    h_from_f,
    h_vector_from_multiset,
    hochster_betti,
    ideal_with_m_vector,
    is_squarefree_strongly_stable,
    is_valid_lambda,
    lambda_from_lsequence,
    lambda_max,
    lambda_of,
    lambda_sequence,
    lsequence_from_lambda,
    macaulay_bound,
    make_clutter,
    mu_direct,
    mu_via_lemma,
    p_polynomial,
    random_chordal_clutter,
    random_strongly_stable_ideal,
    random_tree,
    simplicial_multiset,
)

EX = make_clutter(5, 3, [(1, 2, 3), (1, 2, 4), (1, 3, 4), (2, 3, 4), (1, 4, 5)])


def _criterion(num: int, label: str, budget: float, body) -> None:
    start = time.perf_counter()
    try:
        body()
        elapsed = time.perf_counter() - start
        assert elapsed < budget, f"budget exceeded: {elapsed:.1f}s >= {budget}s"
    except BaseException:
        print(f"ACCEPTANCE {num}: FAIL - {label}")
        raise
    print(f"ACCEPTANCE {num}: PASS - {label} ({elapsed:.1f}s)")


def test_criterion_01_worked_example_all_orders():
    def body():
        orders = enumerate_simplicial_orders(EX)
        assert orders, "no simplicial orders found"
        for order in orders:
            assert len(order) == 4
            assert sorted(simplicial_multiset(order).elements()) == [1, 1, 1, 2]

    _criterion(1, "worked example: every simplicial order has multiset "
                  "{1,1,1,2} and length 4", 1.0, body)


def test_criterion_02_complete_clutter_lambda():
    def body():
        for d in (2, 3, 4):
            for n in range(d, 9):
                assert lambda_of(complete_clutter(n, d)) == complete_lambda(n, d), \
                    (n, d)

    _criterion(2, "search lambda of complete clutters matches the closed "
                  "form for d in {2,3,4}, n <= 8", 120.0, body)


def test_criterion_03_tree_betti_formula():
    def body():
        rng = random.Random(1003)
        for _ in range(20):
            n = rng.randint(4, 9)
            T = random_tree(n, rng)
            ms = simplicial_multiset(find_simplicial_order(T))
            closed_form = tuple((i + 1) * comb(n - 1, i + 2)
                                for i in range(n - 2))
            got = betti_from_multiset(n, 2, ms)
            assert got == closed_form, (n, T.circuits, got, closed_form)
            assert hochster_betti(T).totals() == closed_form, (n, T.circuits)

    _criterion(3, "20 random spanning trees: Betti formula matches the "
                  "closed form and the homology oracle", 120.0, body)


def test_criterion_04_formula_vs_oracle():
    def body():
        rng = random.Random(1004)
        done = 0
        while done < 50:
            n = rng.randint(4, 9)
            C = random_chordal_clutter(n, 3, steps=rng.randint(1, 12), rng=rng)
            ms = simplicial_multiset(find_simplicial_order(C))
            f = f_vector_from_multiset(n, 3, ms)
            assert f == f_vector_direct(C), (n, C.circuits)
            assert h_from_f(f) == h_vector_from_multiset(n, 3, ms), (n, C.circuits)
            table = hochster_betti(C)
            assert table.is_linear(), (n, C.circuits, table.as_dict())
            if C.num_circuits < comb(n, 3):
                assert table.totals() == betti_from_multiset(n, 3, ms), \
                    (n, C.circuits)
            done += 1

    _criterion(4, "50 random chordal clutters (d=3, n<=9): f, h, Betti agree "
                  "with enumeration oracles; resolutions all linear", 600.0, body)


@lru_cache(maxsize=None)
def _msequence_sweep(n: int, d: int) -> tuple[tuple[int, ...], ...]:
    """All M-sequences of length n-d+1 with l_1 <= d, entries <= C(n-1,d-1)."""
    cap = comb(n - 1, d - 1)
    seqs = [(1,)]
    for _ in range(n - d):
        grown = []
        for s in seqs:
            if len(s) == 1:
                high = min(cap, d)
            else:
                high = min(cap, macaulay_bound(s[-1], len(s) - 1))
            grown.extend(s + (v,) for v in range(high + 1))
        seqs = grown
    return tuple(seqs)


def test_criterion_05_possible_lambda_round_trip():
    def body():
        total = 0
        for n, d in ((6, 3), (7, 3), (6, 4)):
            for l in _msequence_sweep(n, d):
                lam = lambda_from_lsequence(n, d, l)
                assert all(v >= 0 for v in lam), (n, d, l, lam)
                assert lsequence_from_lambda(n, d, lam) == l, (n, d, l, lam)
                assert is_valid_lambda(n, d, lam), (n, d, l, lam)
                total += 1
        assert total > 100, f"sweep unexpectedly small: {total}"

    _criterion(5, "every M-sequence at (6,3), (7,3), (6,4) round-trips "
                  "through its lambda-sequence", 300.0, body)


def test_criterion_06_alpha_sigma_p_properties():
    def body():
        for n in range(2, 21):
            for d in range(1, n):
                a = alpha_sequence(n, d)
                assert all(s >= 0 for s in a.sigma), (n, d)
                assert a.sigma[-1] == 0, (n, d)
                p = p_polynomial(n, d)
                assert all(c >= 0 for c in p.coeffs), (n, d)
                assert p.coeffs[-1] == 1 and p.degree == n - d, (n, d)
        for n in range(2, 20):
            for d in range(1, n):
                assert p_polynomial(n + 1, d) == \
                    p_polynomial(n, d) + p_polynomial(n, d - 1), (n, d)

    _criterion(6, "alpha/sigma/p properties and the Pascal recursion hold "
                  "for all 1 <= d < n <= 20", 5.0, body)


def test_criterion_07_bound_attainment():
    def body():
        for n in (5, 6, 7):
            d = 3
            for i in range(1, n - d + 1):
                E = extremal_clutter(n, d, i)
                lam = lambda_of(E)
                assert lam is not None, (n, d, i)
                assert is_squarefree_strongly_stable(circuit_ideal(E)), (n, d, i)
                assert lam[i - 1] == lambda_max(n, d, i), (n, d, i, lam)
        # the per-index bound is over ALL chordal clutters, and a proper
        # subclutter can beat the complete clutter's own lambda
        spike = make_clutter(4, 3, [(1, 2, 3), (1, 2, 4), (1, 3, 4)])
        assert lambda_of(spike) == (3,)
        assert complete_lambda(4, 3) == (2, 1)
        assert 3 > 2

    _criterion(7, "extremal clutters are chordal with strongly stable "
                  "circuit ideals and attain lambda_max", 120.0, body)


def test_criterion_08_generator_counts_lemma():
    def body():
        rng = random.Random(1008)
        for _ in range(30):
            n = rng.randint(4, 7)
            d = rng.choice([2, 3])
            I = random_strongly_stable_ideal(n, d, seeds=rng.randint(1, 4),
                                             rng=rng)
            for j in range(n - d + 1):
                assert mu_via_lemma(I, j) == mu_direct(I, j), (I.gens, j)

    _criterion(8, "30 random strongly stable ideals: generator-count lemma "
                  "matches the direct count at every degree", 60.0, body)


def test_criterion_09_dirac_cross_check():
    def body():
        # exhaustive over all labeled graphs on up to 6 vertices
        for n in range(1, 7):
            pairs = list(combinations(range(1, n + 1), 2))
            for bits in range(1 << len(pairs)):
                edges = [pairs[k] for k in range(len(pairs)) if bits >> k & 1]
                C = make_clutter(n, 2, edges)
                g = nx.Graph()
                g.add_nodes_from(range(1, n + 1))
                g.add_edges_from(edges)
                assert (find_simplicial_order(C) is not None) == \
                    nx.is_chordal(g), (n, edges)
        # plus a random sample on up to 10 vertices
        rng = random.Random(1009)
        for _ in range(200):
            n = rng.randint(1, 10)
            pairs = list(combinations(range(1, n + 1), 2))
            edges = [p for p in pairs if rng.random() < rng.choice((0.2, 0.5, 0.8))]
            C = make_clutter(n, 2, edges)
            g = nx.Graph()
            g.add_nodes_from(range(1, n + 1))
            g.add_edges_from(edges)
            assert (find_simplicial_order(C) is not None) == nx.is_chordal(g), \
                (n, edges)

    _criterion(9, "graph chordality agrees with the perfect-elimination "
                  "oracle on all graphs with <= 6 vertices and 200 random "
                  "graphs with <= 10", 300.0, body)


def test_criterion_10_betti_realizability():
    def body():
        for n, d in ((6, 3), (7, 3), (6, 4)):
            for l in _msequence_sweep(n, d):
                lam = lambda_from_lsequence(n, d, l)
                witness = ideal_with_m_vector(n, d, l)
                C = complement(make_clutter(n, d, witness.gens))
                order = find_simplicial_order(C)
                assert order is not None, (n, d, l)
                assert lambda_sequence(simplicial_multiset(order)) == lam, \
                    (n, d, l, lam)
                expected = betti_from_multiset(n, d, Counter(
                    {i + 1: v for i, v in enumerate(lam) if v}))
                table = hochster_betti(C)
                assert table.totals() == expected, (n, d, l)
                assert table.is_linear(), (n, d, l)

    _criterion(10, "every M-sequence in the sweep is realized by a chordal "
                   "clutter whose Betti sequence matches the formula and "
                   "the homology oracle", 300.0, body)
