import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gordonlab.hypergraph import Hypergraph, build_H_lambda
from gordonlab.partitions import Interpretation, Partition, PartitionClass, enumerate_class
from gordonlab.qseries import product_side
from gordonlab.signature import (
    Method,
    neighborly_signed_series,
    prefix_weight,
    signature,
    signature_bruteforce,
    signature_fast,
    signature_vertex_side,
)

from oracles import spanning_signed_count

P = Partition.parse
INDUCED, DEFINITION = Interpretation.INDUCED, Interpretation.DEFINITION
RI = [(r, i) for r in range(1, 5) for i in range(1, r + 1)]


@st.composite
def hypergraphs(draw, max_vertices=7, max_edges=8):
    nv = draw(st.integers(0, max_vertices))
    if nv == 0:
        return Hypergraph()
    edges = draw(
        st.lists(st.frozensets(st.integers(0, nv - 1), min_size=1), max_size=max_edges)
    )
    return Hypergraph(range(nv), edges)


@pytest.mark.parametrize(
    "parts,expected",
    [("3,2,2", -1), ("2,2,1,1,1", 0), ("2,2,2,1", 1)],
)
def test_n7_signatures(parts, expected):
    H = build_H_lambda(P(parts), 3, 3)
    assert signature_bruteforce(H).value == expected
    assert spanning_signed_count(H.vertices, H.edges) == expected
    assert signature_fast(P(parts), 3, 3).value == expected


def test_n7_sum_is_zero():
    total = sum(signature_fast(lam, 3, 3).value for lam in enumerate_class(7, PartitionClass.neighborly(3, 3)))
    assert total == 0


def test_bruteforce_provenance():
    res = signature_bruteforce(build_H_lambda(P("2,2,1,1,1"), 3, 3))
    assert res.method is Method.BRUTE_FORCE
    assert res.edge_count == 3
    assert res.spanning_subset_count == 2


def test_empty_partition_and_hypergraph():
    assert signature_bruteforce(Hypergraph()).value == 1
    assert signature_fast(Partition(()), 2, 1).value == 1


def test_bruteforce_limit():
    with pytest.raises(ValueError):
        signature_bruteforce(Hypergraph(range(26), [(k,) for k in range(26)]))
    H = Hypergraph(range(4), [(k,) for k in range(4)])
    with pytest.raises(ValueError):
        signature_bruteforce(H, limit=3)
    assert signature_bruteforce(H, limit=4).value == 1


def test_fast_rejects_non_neighborly():
    with pytest.raises(ValueError):
        signature_fast(P("5"), 3, 1)
    with pytest.raises(ValueError):
        signature(P("3,1,1"), 3, 2, method=Method.BRUTE_FORCE)


def test_fast_2111_matches_brute():
    lam = P("2,1,1,1")
    assert signature_fast(lam, 3, 3).value == signature_bruteforce(build_H_lambda(lam, 3, 3)).value == 1


def test_prefix_weight_matches_subset_enumeration():
    import itertools

    for m in range(0, 6):
        for p in range(0, m + 1):
            total = 0
            for size in range(m + 1):
                for W in itertools.combinations(range(1, m + 1), size):
                    pre = 0
                    while pre + 1 in W:
                        pre += 1
                    if pre == p:
                        total += (-1) ** size
            assert prefix_weight(m, p) == total


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_inclusion_exclusion_identity(H):
    assert signature_bruteforce(H).value == signature_vertex_side(H)
    assert signature_bruteforce(H).value == spanning_signed_count(H.vertices, H.edges)


@settings(max_examples=200, deadline=None)
@given(hypergraphs())
def test_isolated_vertex_forces_zero(H):
    if H.vertices and H.isolated_vertices():
        assert signature_bruteforce(H).value == 0


@pytest.mark.parametrize("r,i", RI)
@pytest.mark.parametrize("interp", [INDUCED, DEFINITION])
def test_fast_equals_brute_small(r, i, interp):
    for n in range(0, 15):
        for lam in enumerate_class(n, PartitionClass.neighborly(r, i, interp)):
            H = build_H_lambda(lam, r, i, interp)
            assert signature_fast(lam, r, i, interp).value == signature_bruteforce(H).value, str(lam)


@pytest.mark.parametrize("r,i", RI)
def test_interpretations_give_same_series(r, i):
    assert neighborly_signed_series(r, i, 20, INDUCED) == neighborly_signed_series(r, i, 20, DEFINITION)


@pytest.mark.parametrize("r,i", RI)
def test_partitions_only_in_definition_set_have_zero_signature(r, i):
    for n in range(0, 16):
        a = set(enumerate_class(n, PartitionClass.neighborly(r, i, INDUCED)))
        b = set(enumerate_class(n, PartitionClass.neighborly(r, i, DEFINITION)))
        for lam in a ^ b:
            interp = INDUCED if lam in a else DEFINITION
            assert signature_fast(lam, r, i, interp).value == 0


def test_series_constant_term_and_q7():
    assert neighborly_signed_series(3, 3, 7)[7] == 0
    for r, i in RI:
        assert neighborly_signed_series(r, i, 0).coeffs == (1,)


def test_series_rogers_ramanujan_case():
    assert neighborly_signed_series(2, 2, 20) == product_side(2, 2, 20)


def test_series_methods_agree():
    assert neighborly_signed_series(3, 2, 14, method=Method.BRUTE_FORCE) == neighborly_signed_series(3, 2, 14)
