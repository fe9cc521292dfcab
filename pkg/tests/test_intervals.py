"""Exact rational valence intervals and the crude counting bounds."""
from __future__ import annotations

from fractions import Fraction

import pytest

from edgemagic import (
    Graph,
    em_interval,
    mk_complete_bipartite,
    mk_crown,
    mk_cycle,
    sem_interval,
    trivial_valence_bounds,
)
from naive import CORPUS, naive_interval_extremes


def test_em_extremes_match_brute_force_on_small_graphs():
    for name, G in CORPUS.items():
        rep = em_interval(G)
        lo, hi = naive_interval_extremes(G, "em")
        assert (rep.raw_min, rep.raw_max) == (lo, hi), name


def test_sem_extremes_match_brute_force_on_small_graphs():
    for name, G in CORPUS.items():
        rep = sem_interval(G)
        lo, hi = naive_interval_extremes(G, "sem")
        assert (rep.raw_min, rep.raw_max) == (lo, hi), name


def test_em_extremes_sum_to_three_times_label_count_plus_one():
    for name, G in CORPUS.items():
        rep = em_interval(G)
        assert rep.raw_min + rep.raw_max == 3 * (G.p + G.q + 1), name


def test_c4_em_interval_exact():
    rep = em_interval(mk_cycle(4))
    assert (rep.lo, rep.hi) == (12, 15)
    assert (rep.raw_min, rep.raw_max) == (Fraction(23, 2), Fraction(31, 2))
    assert rep.size == 4
    assert list(rep.values()) == [12, 13, 14, 15]
    assert 12 in rep and 16 not in rep


def test_c4_sem_interval_is_empty():
    rep = sem_interval(mk_cycle(4))
    assert rep.raw_min == rep.raw_max == Fraction(23, 2)
    assert rep.empty
    assert rep.size == 0


def test_crown_em_interval_exact():
    rep = em_interval(mk_crown(4, 2))
    assert (rep.lo, rep.hi) == (28, 47)


def test_k33_em_interval_exact():
    rep = em_interval(mk_complete_bipartite(3, 3))
    assert (rep.lo, rep.hi) == (18, 30)


def test_edgeless_graphs_have_no_interval():
    G = Graph(3, ())
    with pytest.raises(ValueError):
        em_interval(G)
    with pytest.raises(ValueError):
        sem_interval(G)
    with pytest.raises(ValueError):
        trivial_valence_bounds(G)


def test_trivial_bounds_formula():
    assert trivial_valence_bounds(mk_cycle(4)) == (11, 16)
    assert trivial_valence_bounds(Graph(2, ((1, 2),))) == (6, 6)
