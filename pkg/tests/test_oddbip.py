from fractions import Fraction

import pytest

from hyperten import families
from hyperten.hypergraph import Hypergraph, HypergraphError, connected_components
from hyperten.oddbip import (
    OddBipartition,
    check_partition,
    check_witness,
    find_odd_bipartition,
    laplacian_allones_check,
    sign_vector,
    signed_perron_certificate,
    signless_kernel_certificate,
    similarity_certificate,
)
from hyperten.perron import spectral_radius
from hyperten.tensor import dense_adjacency, dense_apply, dense_signless

from conftest import FIXTURES
from helpers import random_connected, random_hypergraph
from oracles import all_sign_vectors, sign_flip_is_symmetry

C4 = families.cycle(4)
C3 = families.cycle(3)
MIXED = Hypergraph(4, ((1, 2), (1, 2, 3, 4)))


class TestDecision:
    def test_c4(self):
        assert find_odd_bipartition(C4) == OddBipartition(True, (1, 3))

    def test_c3(self):
        bip = find_odd_bipartition(C3)
        assert not bip.feasible and bip.witness_kind == "inconsistent_rows"
        assert set(bip.witness_edges) == set(C3.edges)
        assert check_witness(C3, bip)

    def test_mixed(self):
        assert find_odd_bipartition(MIXED) == OddBipartition(True, (1,))

    def test_pendant(self, pendant):
        assert find_odd_bipartition(pendant) == OddBipartition(True, (4,))

    def test_odd_edge_short_circuits(self):
        H = Hypergraph(5, ((1, 2), (2, 3, 4), (4, 5)))
        bip = find_odd_bipartition(H)
        assert bip.witness_kind == "odd_edge" and bip.witness_edges == ((2, 3, 4),)
        assert check_witness(H, bip)

    def test_edgeless_is_feasible(self):
        assert find_odd_bipartition(Hypergraph(3, ())) == OddBipartition(True, ())

    def test_decision_matches_exhaustive_search(self, rng):
        for _ in range(300):
            H = random_hypergraph(rng, n_max=8, sizes=(2, 4), density=1)
            bip = find_odd_bipartition(H)
            brute = [V1 for V1 in _subsets(H.n) if check_partition(H, V1)]
            assert bip.feasible == bool(brute)
            if bip.feasible:
                assert check_partition(H, bip.V1)
                # canonical choice: smallest with vertex n as the most significant bit
                assert bip.V1 == min(brute, key=lambda s: sum(1 << (v - 1) for v in s))
            else:
                assert check_witness(H, bip)
            if any(len(e) % 2 for e in H.edges):
                assert not bip.feasible

    def test_witness_checker_rejects_nonsense(self):
        assert not check_witness(C3, OddBipartition(False, None, "inconsistent_rows", ((1, 2),)))
        assert not check_witness(C3, OddBipartition(False, None, "odd_edge", ((1, 2),)))
        assert not check_witness(C4, OddBipartition(True, (1, 3)))


def _subsets(n):
    for mask in range(1 << n):
        yield tuple(v for v in range(1, n + 1) if mask >> (v - 1) & 1)


class TestCertificates:
    @pytest.mark.parametrize("H", [FIXTURES["K2"], C4, MIXED, FIXTURES["pendant"]], ids=["K2", "C4", "mixed", "pendant"])
    def test_feasible_fixtures(self, H):
        bip = find_odd_bipartition(H)
        assert signless_kernel_certificate(H, bip).value == 0
        assert signless_kernel_certificate(H, bip).value == Fraction(0)
        assert signless_kernel_certificate(H, bip, exact=False).value <= 1e-12
        assert similarity_certificate(H, bip)
        r = spectral_radius(H)
        assert signed_perron_certificate(H, bip, r).value <= 10 * 1e-10

    def test_k2_signed_vector(self):
        bip = find_odd_bipartition(FIXTURES["K2"])
        assert list(sign_vector(2, bip.V1)) == [-1, 1]
        assert signed_perron_certificate(FIXTURES["K2"], bip, spectral_radius(FIXTURES["K2"])).value == 0

    def test_c4_signed_eigenpair(self):
        bip = find_odd_bipartition(C4)
        r = spectral_radius(C4)
        assert r.rho == pytest.approx(2)
        assert signed_perron_certificate(C4, bip, r).value <= 1e-8

    def test_kernel_through_dense_oracle(self):
        for H in (C4, MIXED, FIXTURES["pendant"]):
            s = [int(v) for v in sign_vector(H.n, find_odd_bipartition(H).V1)]
            assert all(v == 0 for v in dense_apply(dense_signless(H), s))

    def test_wrong_partition_fails_certificates(self):
        bad = OddBipartition(True, (1, 2))
        assert signless_kernel_certificate(C4, bad).value > 0
        assert not similarity_certificate(C4, bad)

    def test_preconditions(self):
        bip = find_odd_bipartition(C3)
        with pytest.raises(HypergraphError):
            signless_kernel_certificate(C3, bip)
        with pytest.raises(HypergraphError):
            similarity_certificate(C3, bip)
        H = FIXTURES["pendant"]
        r = spectral_radius(H, max_iterations=1)
        assert not r.converged
        with pytest.raises(ValueError):
            signed_perron_certificate(H, find_odd_bipartition(H), r)

    def test_laplacian_all_ones(self, pendant, rng):
        assert laplacian_allones_check(pendant).value == 0
        assert laplacian_allones_check(Hypergraph(3, ())).value == 0
        for _ in range(50):
            assert laplacian_allones_check(random_hypergraph(rng)).value == 0


def test_forward_direction_on_random_feasible(rng):
    """Feasible bipartition => -rho is an H-eigenvalue and the similarity identities hold exactly."""
    found = 0
    while found < 25:
        H = random_connected(rng, n_max=8, sizes=(2, 4), density=1)
        bip = find_odd_bipartition(H)
        if not bip.feasible:
            continue
        found += 1
        r = spectral_radius(H)
        assert signed_perron_certificate(H, bip, r).value <= 10 * 1e-10
        assert signless_kernel_certificate(H, bip).value == 0
        assert similarity_certificate(H, bip)


INFEASIBLE = {
    "C3": C3,
    "C5": families.cycle(5),
    "K4": families.complete_uniform(4, 2),
    "odd_edge_rank4": Hypergraph(5, ((1, 2, 3, 4), (3, 4, 5))),
    "triangle_of_4sets": Hypergraph(6, ((1, 2, 3, 4), (3, 4, 5, 6), (1, 2, 5, 6))),
    "K4_3": families.complete_uniform(4, 3),
}


@pytest.mark.parametrize("name", sorted(INFEASIBLE))
def test_infeasible_has_no_sign_symmetry(name):
    H = INFEASIBLE[name]
    assert len(connected_components(H)) == 1
    bip = find_odd_bipartition(H)
    assert not bip.feasible and check_witness(H, bip)
    k = H.rank
    A = list(dense_adjacency(H).nonzeros())
    Q = dense_signless(H)
    for s in all_sign_vectors(H.n):
        assert not sign_flip_is_symmetry(A, s, k, -1)
        # no +-1 vector is a kernel vector of Q
        assert any(v != 0 for v in dense_apply(Q, list(s)))
    if k % 2 == 0:
        # Q x^k > 0 over all sign vectors (only meaningful for even order)
        Qx = min(sum(a * b for a, b in zip(s, dense_apply(Q, list(s)))) for s in all_sign_vectors(H.n))
        assert Qx > 0
