import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gordonlab.hilbert import (
    EdgeIdeal,
    Monomial,
    gordon_ideal_generators,
    hilbert_numerator_weighted,
    hilbert_series_weighted,
    hp_P_ri,
    hp_quotient_J,
    hp_quotient_J_by_monomials,
    minimal_generators,
    polarized_gordon_ideal,
    quotient_monomial_series,
    quotient_series_by_support,
    verify_polarization_relation,
)
from gordonlab.hypergraph import Hypergraph, Vertex, build_H_lambda, truncate_H_infinity
from gordonlab.partitions import Partition, PartitionClass
from gordonlab.qseries import TruncatedSeries, class_series, product_side
from gordonlab.verify import random_simple_hypergraph, verify_hilbert_prop

X = Vertex


def test_no_edges_numerator_is_one():
    assert hilbert_numerator_weighted(Hypergraph([1, 2]), {1: 1, 2: 2}, 6) == TruncatedSeries.one(6)


def test_numerator_h_2111():
    H = build_H_lambda(Partition.parse("2,1,1,1"), 3, 3)
    assert hilbert_numerator_weighted(H, None, 8).coeffs == (1, 0, 0, -1, -1, 1, 0, 0, 0)


def test_single_edge_numerator():
    H = Hypergraph("abc", ["abc"])
    w = {"a": 1, "b": 2, "c": 4}
    assert hilbert_numerator_weighted(H, w, 9) == TruncatedSeries.one(9).mul_one_minus_qk(7)


def test_non_simple_rejected():
    H = Hypergraph([1, 2, 3], [(1, 2), (1, 2, 3)])
    with pytest.raises(ValueError):
        hilbert_numerator_weighted(H, {1: 1, 2: 1, 3: 1}, 5)


def test_heavy_edges_are_dropped_exactly():
    H = truncate_H_infinity(2, 2, 8)
    w = {v: v.level for v in H.vertices}
    full = hilbert_numerator_weighted(H, w, 30, limit=40).restrict(9)
    assert hilbert_numerator_weighted(H, w, 9) == full


def test_support_single_free_vertex():
    assert quotient_series_by_support(Hypergraph([0]), {0: 1}, 6).coeffs == (1,) * 7


def test_support_complete_graph_on_two_vertices():
    H = Hypergraph([0, 1], [(0, 1)])
    assert quotient_series_by_support(H, {0: 1, 1: 1}, 6).coeffs == (1, 2, 2, 2, 2, 2, 2)


def test_support_size_limit():
    with pytest.raises(ValueError):
        quotient_series_by_support(Hypergraph(range(30)), {k: 1 for k in range(30)}, 3)


def brute_monomials_outside(H, w, trunc):
    """Enumerate exponent vectors directly and test ideal membership."""
    ideal = EdgeIdeal.of(H)
    return quotient_monomial_series(ideal.generators, H.vertices, w, trunc)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6))
def test_lcm_formula_against_support_oracle(seed):
    H, w = random_simple_hypergraph(random.Random(seed), max_vertices=6, max_edges=6)
    lhs = hilbert_series_weighted(H, w, 10)
    assert lhs == quotient_series_by_support(H, w, 10)
    assert lhs == brute_monomials_outside(H, w, 10)


def test_random_suite_fifty_graphs():
    rep = verify_hilbert_prop(15, samples=50, seed=1)
    assert rep.passed
    assert all(row[1] == 50 for row in rep.rows)


def test_random_hypergraphs_are_simple():
    rng = random.Random(3)
    for _ in range(100):
        H, w = random_simple_hypergraph(rng)
        assert H.is_simple()
        assert len(H.vertices) <= 8 and len(H.edges) <= 10
        assert all(1 <= x <= 3 for x in w.values())


# -- monomials and ideals ---------------------------------------------------------


def test_monomial_ops():
    a = Monomial({1: 2, 2: 1})
    b = Monomial({2: 3, 5: 1})
    assert a.lcm(b) == Monomial({1: 2, 2: 3, 5: 1})
    assert Monomial({1: 1}).divides(a)
    assert not b.divides(a)
    assert a.weight(lambda j: j) == 4
    assert not a.is_squarefree()
    assert Monomial.squarefree([X(1, 1), X(2, 1)]).is_squarefree()
    assert Monomial.from_dict(a.to_dict()) == a
    assert str(a) == "x_1^2*x_2"


def test_edge_ideal_json_roundtrip():
    I = EdgeIdeal.of(build_H_lambda(Partition.parse("2,2,1,1,1"), 3, 3))
    assert EdgeIdeal.from_json(I.to_json()) == I
    assert I.contains(Monomial({X(1, 1): 2, X(1, 2): 1, X(1, 3): 5}))
    assert not I.contains(Monomial({X(1, 1): 9, X(2, 2): 9}))


def test_gordon_ideal_generators():
    gens = gordon_ideal_generators(3, 2, 3)
    assert gens[0] == Monomial({1: 2})
    assert Monomial({1: 1, 2: 2}) in gens
    assert Monomial({2: 3}) in gens
    assert Monomial({3: 3}) in gens
    assert Monomial({1: 2}).polarize() == Monomial.squarefree([X(1, 1), X(1, 2)])
    assert Monomial({2: 2, 3: 1}).polarize() == Monomial.squarefree([X(2, 1), X(2, 2), X(3, 1)])


@pytest.mark.parametrize("r,i", [(r, i) for r in range(1, 5) for i in range(1, r + 1)])
def test_polarization_gives_h_infinity_edges(r, i):
    for levels in range(1, 7):
        edges = {Monomial.squarefree(e) for e in truncate_H_infinity(r, i, levels).edges}
        assert set(polarized_gordon_ideal(r, i, levels)) == edges


def test_minimal_generators_drop_multiples():
    gens = [Monomial({1: 2}), Monomial({1: 3}), Monomial({1: 2, 2: 1}), Monomial({2: 1})]
    assert set(minimal_generators(gens)) == {Monomial({1: 2}), Monomial({2: 1})}


# -- graded algebras ------------------------------------------------------------------


def test_hp_constant_term():
    for r in range(1, 5):
        for i in range(1, r + 1):
            assert hp_P_ri(r, i, 0).coeffs == (1,)


@pytest.mark.parametrize("r,i", [(2, 2), (2, 1), (3, 1), (3, 3)])
def test_hp_routes_agree(r, i):
    assert hp_P_ri(r, i, 12, route="numerator") == hp_P_ri(r, i, 12, route="signature")


def test_hp_r3_i3_closed_form():
    expect = product_side(3, 3, 10).mul_inv_one_minus_qk(1, 3)
    for j in range(2, 11):
        expect = expect.mul_inv_one_minus_qk(j, 3)
    assert hp_P_ri(3, 3, 10) == expect


def test_hp_counts_standard_monomials_directly():
    # monomials in x_{j,k} (levels <= 8) outside I(H^inf_{2,2}), counted one by one
    H = truncate_H_infinity(2, 2, 9)
    direct = quotient_monomial_series(
        [Monomial.squarefree(e) for e in H.edges], H.vertices, lambda v: v.level, 8
    )
    assert hp_P_ri(2, 2, 8) == direct


def test_hp_bad_route():
    with pytest.raises(ValueError):
        hp_P_ri(2, 2, 4, route="nope")


@pytest.mark.parametrize("r,i", [(r, i) for r in range(2, 5) for i in range(1, r + 1)])
def test_quotient_j_series(r, i):
    b = hp_quotient_J(r, i, 20)
    assert b == class_series(PartitionClass.gordon_a(r, i), 20)
    assert b == hp_quotient_J_by_monomials(r, i, 20)


def test_polarization_relation_rr():
    rep = verify_polarization_relation(2, 2, 20)
    assert rep.passed
    assert len(rep.rows) == 21
