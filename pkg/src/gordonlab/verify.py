"""Identity checks that produce :class:`VerificationReport` objects."""
from __future__ import annotations

import functools
import random
import time
from typing import Callable

from .hilbert import hilbert_numerator_weighted, quotient_series_by_support, verify_polarization_relation
from .hypergraph import Hypergraph, build_H_lambda
from .partitions import Interpretation, PartitionClass, enumerate_class
from .qseries import (
    andrews_gordon_product_side,
    andrews_gordon_sum_side,
    class_series,
    product_side,
)
from .report import VerificationReport
from .signature import neighborly_signed_series, signature_bruteforce, signature_fast

IDENTITIES = ("main", "gordon", "andrews-gordon", "hilbert-prop", "polarization", "dp-vs-brute")


def _timed(fn: Callable[..., VerificationReport]) -> Callable[..., VerificationReport]:
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.elapsed = time.perf_counter() - t0
        return rep

    return wrapper


@_timed
def verify_main(r: int, i: int, trunc: int, interp: Interpretation = Interpretation.INDUCED) -> VerificationReport:
    """Signed neighborly series against prod_{j = 0,+-i mod 2r+1} (1 - q^j)."""
    lhs = neighborly_signed_series(r, i, trunc, interp)
    rhs = product_side(r, i, trunc)
    signed_r = class_series(PartitionClass.distinct_r(r, i), trunc, signed=True)
    return VerificationReport.compare(
        "main",
        {"r": r, "i": i, "N": trunc, "interp": interp.value},
        lhs,
        rhs,
        lhs_label="sum delta",
        rhs_label="product",
        signed_R_equals_product=signed_r == rhs,
    )


@_timed
def verify_gordon(r: int, i: int, trunc: int) -> VerificationReport:
    lhs = class_series(PartitionClass.gordon_b(r, i), trunc)
    rhs = class_series(PartitionClass.gordon_a(r, i), trunc)
    return VerificationReport.compare("gordon", {"r": r, "i": i, "N": trunc}, lhs, rhs, "B", "A")


@_timed
def verify_andrews_gordon(r: int, i: int, trunc: int) -> VerificationReport:
    lhs = andrews_gordon_sum_side(r, i, trunc)
    rhs = andrews_gordon_product_side(r, i, trunc)
    return VerificationReport.compare("andrews-gordon", {"r": r, "i": i, "N": trunc}, lhs, rhs, "sum side", "product side")


@_timed
def verify_polarization(r: int, i: int, trunc: int, interp: Interpretation = Interpretation.INDUCED) -> VerificationReport:
    return verify_polarization_relation(r, i, trunc, interp)


def random_simple_hypergraph(
    rng: random.Random, max_vertices: int = 8, max_edges: int = 10, max_weight: int = 3
) -> tuple[Hypergraph, dict[int, int]]:
    """Random simple hypergraph on vertices 0..n-1 with random weights in 1..max_weight."""
    nv = rng.randint(1, max_vertices)
    weights = {v: rng.randint(1, max_weight) for v in range(nv)}
    target = rng.randint(0, max_edges)
    edges: list[frozenset] = []
    for _ in range(20 * max_edges):
        if len(edges) >= target:
            break
        size = rng.randint(1, nv)
        e = frozenset(rng.sample(range(nv), size))
        if any(e <= f or f <= e for f in edges):
            continue
        edges.append(e)
    return Hypergraph(range(nv), edges), weights


@_timed
def verify_hilbert_prop(trunc: int = 15, samples: int = 50, seed: int = 0) -> VerificationReport:
    """Numerator / vertex product against the edge-free-support count on random hypergraphs.

    Row n: how many sampled hypergraphs there are, and how many agree at q^n.
    """
    rng = random.Random(seed)
    agree = [0] * (trunc + 1)
    bad = []
    for k in range(samples):
        H, w = random_simple_hypergraph(rng)
        num = hilbert_numerator_weighted(H, w, trunc)
        for v in H.vertices:
            num = num.mul_inv_one_minus_qk(w[v])
        oracle = quotient_series_by_support(H, w, trunc)
        for n in range(trunc + 1):
            if num[n] == oracle[n]:
                agree[n] += 1
        if num != oracle:
            bad.append(k)
    return VerificationReport.compare(
        "hilbert-prop",
        {"N": trunc, "samples": samples, "seed": seed},
        [samples] * (trunc + 1),
        agree,
        lhs_label="samples",
        rhs_label="agreeing",
        mismatched_samples=bad,
    )


@_timed
def verify_dp_vs_brute(r: int, i: int, trunc: int, interp: Interpretation = Interpretation.INDUCED) -> VerificationReport:
    """Row n: neighborly partitions of n, and how many get the same delta from both routes."""
    cls = PartitionClass.neighborly(r, i, interp)
    totals, agree, bad = [], [], []
    for n in range(trunc + 1):
        members = enumerate_class(n, cls)
        ok = 0
        for lam in members:
            fast = signature_fast(lam, r, i, interp).value
            brute = signature_bruteforce(build_H_lambda(lam, r, i, interp)).value
            if fast == brute:
                ok += 1
            else:
                bad.append(str(lam))
        totals.append(len(members))
        agree.append(ok)
    return VerificationReport.compare(
        "dp-vs-brute",
        {"r": r, "i": i, "N": trunc, "interp": interp.value},
        totals,
        agree,
        lhs_label="neighborly",
        rhs_label="agreeing",
        mismatches=bad,
    )


def run_identity(
    identity: str,
    r: int,
    i: int,
    trunc: int,
    interp: Interpretation = Interpretation.INDUCED,
    samples: int = 50,
    seed: int = 0,
) -> VerificationReport:
    if identity == "main":
        return verify_main(r, i, trunc, interp)
    if identity == "gordon":
        return verify_gordon(r, i, trunc)
    if identity == "andrews-gordon":
        return verify_andrews_gordon(r, i, trunc)
    if identity == "hilbert-prop":
        return verify_hilbert_prop(trunc, samples, seed)
    if identity == "polarization":
        return verify_polarization(r, i, trunc, interp)
    if identity == "dp-vs-brute":
        return verify_dp_vs_brute(r, i, trunc, interp)
    raise ValueError(f"unknown identity {identity!r}; choose from {', '.join(IDENTITIES)}")

