import math
from fractions import Fraction

import pytest

from hyperten import families
from hyperten.bounds import (
    bounds_report,
    integer_root,
    lower_bound_average_degree,
    upper_bound_edge_degree_product,
    upper_bound_max_degree,
    upper_bound_uniform_geometric_mean,
    upper_bound_yuan_pairwise,
)
from hyperten.hypergraph import Hypergraph, HypergraphError, is_regular
from hyperten.perron import spectral_radius, spectral_radius_per_component

from conftest import FIXTURES
from helpers import random_connected, random_hypergraph

K4_3 = families.complete_uniform(4, 3)


def test_integer_root():
    assert integer_root(27, 3) == 3.0
    assert integer_root(8, 4) == 8 ** 0.25
    assert integer_root(10**40, 8) == 1e5
    assert integer_root(0, 3) == 0.0


class TestAverageDegree:
    def test_examples(self, pendant):
        assert lower_bound_average_degree(pendant)[:2] == (Fraction(6, 5), False)
        assert lower_bound_average_degree(K4_3)[:2] == (3, True)
        assert lower_bound_average_degree(Hypergraph(3, ())).value == 0

    def test_empty_vertex_set(self):
        with pytest.raises(HypergraphError):
            lower_bound_average_degree(Hypergraph(0, ()))


class TestMaxDegree:
    def test_examples(self, pendant):
        assert upper_bound_max_degree(pendant)[:2] == (2, False)
        assert upper_bound_max_degree(FIXTURES["K2"])[:2] == (1, True)
        star = families.star(3)
        assert upper_bound_max_degree(star)[:2] == (3, False)
        assert spectral_radius(star).rho == pytest.approx(math.sqrt(3), abs=1e-9)


class TestEdgeDegreeProduct:
    def test_pendant(self, pendant):
        b = upper_bound_edge_degree_product(pendant)
        assert b.power == 8 and b.witness == (4, 5)
        assert b.value == pytest.approx(1.681793, abs=1e-6)

    def test_uniform_reduces_to_geometric_mean(self, rng):
        for _ in range(50):
            H = random_hypergraph(rng, sizes=(3, 3))
            b = upper_bound_edge_degree_product(H)
            direct = max(math.prod(H.degrees[v - 1] for v in e) for e in H.edges)
            assert b.power == direct
            assert upper_bound_uniform_geometric_mean(H) == b

    def test_regular_gives_degree(self):
        for H in (K4_3, families.cycle(5), Hypergraph(4, ((1, 2, 3, 4),))):
            d = H.degrees[0]
            assert upper_bound_edge_degree_product(H).value == d
            assert upper_bound_yuan_pairwise(H).value == d

    def test_largest_degree_takes_the_padding(self):
        # degrees 3,1 on edge {1,2} with k=3: 3^2 * 1 = 9, not 3 * 1^2
        H = Hypergraph(5, ((1, 2), (1, 3, 4), (1, 4, 5)))
        b = upper_bound_edge_degree_product(H)
        assert b.power == 9 and b.witness == (1, 2)

    def test_edgeless(self):
        with pytest.raises(HypergraphError):
            upper_bound_edge_degree_product(Hypergraph(2, ()))
        assert upper_bound_uniform_geometric_mean(Hypergraph(2, ())) is None


class TestYuan:
    def test_examples(self, pendant):
        b = upper_bound_yuan_pairwise(pendant)
        assert b.power == 2 and b.value == math.sqrt(2)
        assert upper_bound_yuan_pairwise(K4_3).value == 3

    def test_geometric_mean_refines_it_on_uniform(self, rng):
        # exact in integers: prod d_i <= (max pair d_i d_j)^{k/2}, compared as squares
        for _ in range(200):
            H = random_hypergraph(rng, sizes=(3, 3) if rng.random() < 0.5 else (4, 4))
            k = H.rank
            geo = upper_bound_uniform_geometric_mean(H).power
            pair = upper_bound_yuan_pairwise(H).power
            assert geo**2 <= pair**k


class TestReport:
    def test_pendant(self, pendant):
        r = spectral_radius(pendant)
        rep = bounds_report(pendant, r)
        assert rep.violations == []
        assert rep.lower_average_degree == Fraction(6, 5)
        assert rep.best_upper == pytest.approx(8 ** 0.25)
        assert not rep.yuan_in_scope
        assert 1.2 <= r.rho_lower <= r.rho_upper <= 1.68180

    def test_complete_uniform_all_three(self):
        rep = bounds_report(K4_3, spectral_radius(K4_3))
        assert rep.lower_average_degree == 3
        assert rep.upper_max_degree == 3
        assert rep.upper_edge_degree_product == 3.0
        assert rep.upper_uniform_geometric_mean == 3.0
        assert rep.upper_yuan_pairwise == 3.0
        assert rep.best_upper == 3.0
        assert rep.equality_flags == {"average_degree": True, "max_degree": True}

    def test_k2(self):
        rep = bounds_report(FIXTURES["K2"])
        assert (rep.lower_average_degree, rep.upper_max_degree, rep.upper_edge_degree_product,
                rep.upper_yuan_pairwise, rep.best_upper) == (1, 1, 1.0, 1.0, 1.0)

    def test_violation_recorded(self, pendant):
        fake = spectral_radius(pendant)
        fake.rho_lower, fake.rho_upper = 5.0, 5.0
        assert bounds_report(pendant, fake).violations

    def test_disconnected_flagged(self):
        rep = bounds_report(Hypergraph(4, ((1, 2), (3, 4))))
        assert not rep.connected and rep.notes

    def test_edgeless(self):
        rep = bounds_report(Hypergraph(3, ()))
        assert rep.best_upper == 0 and rep.upper_edge_degree_product is None


def test_sandwich_and_equality_on_random(rng):
    for _ in range(150):
        H = random_connected(rng)
        r = spectral_radius(H)
        rep = bounds_report(H, r)
        assert rep.violations == []
        assert float(rep.lower_average_degree) - 1e-8 <= r.rho_lower
        assert r.rho_upper <= min(rep.upper_max_degree, rep.upper_edge_degree_product) + 1e-8
        at_lower = abs(r.rho - float(rep.lower_average_degree)) <= 1e-9
        at_upper = abs(r.rho - rep.upper_max_degree) <= 1e-9
        assert at_lower == is_regular(H) == at_upper


def test_sandwich_disconnected(rng):
    for _ in range(50):
        H = random_hypergraph(rng)
        r = spectral_radius_per_component(H)
        rep = bounds_report(H, r)
        assert rep.violations == []


def test_singleton_edges_have_no_pairwise_bound():
    H = Hypergraph(2, ((1,),), allow_singletons=True)
    assert upper_bound_yuan_pairwise(H) is None
    rep = bounds_report(H)
    assert rep.upper_yuan_pairwise is None and not rep.yuan_in_scope
    H = Hypergraph(2, ((1,), (1, 2)), allow_singletons=True)
    assert upper_bound_yuan_pairwise(H).witness == (1, 2)
