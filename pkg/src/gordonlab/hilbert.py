"""Edge ideals of hypergraphs and weighted Hilbert series.

Only univariate specializations are ever formed: each variable v is sent to
q^w(v).  For the partition hypergraphs the weight of x_{j,k} is j.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Callable, Hashable, Iterable, Mapping, Union

import numpy as np

from .hypergraph import Hypergraph, Vertex, truncate_H_infinity, vertex_weight
from .partitions import Interpretation, PartitionClass, check_params
from .qseries import TruncatedSeries, _check_trunc, class_series
from .report import VerificationReport
from .signature import BRUTE_FORCE_EDGE_LIMIT, Method, _union_masks, edge_masks, neighborly_signed_series

WeightAssignment = Union[Mapping[Hashable, int], Callable[[Hashable], int]]


def _weigher(w: WeightAssignment | None) -> Callable[[Hashable], int]:
    if w is None:
        return vertex_weight
    if callable(w):
        return w
    return w.__getitem__


@dataclass(frozen=True)
class Monomial:
    """Exponent map variable -> positive exponent, stored as a sorted tuple of pairs."""

    exps: tuple

    def __init__(self, exps: Mapping[Hashable, int] | Iterable[tuple[Hashable, int]] = ()):
        items = exps.items() if isinstance(exps, Mapping) else exps
        acc: dict = {}
        for var, e in items:
            if e < 0:
                raise ValueError(f"negative exponent for {var}")
            if e:
                acc[var] = acc.get(var, 0) + e
        object.__setattr__(self, "exps", tuple(sorted(acc.items())))

    @classmethod
    def squarefree(cls, variables: Iterable[Hashable]) -> Monomial:
        return cls((v, 1) for v in set(variables))

    def as_dict(self) -> dict:
        return dict(self.exps)

    @property
    def support(self) -> frozenset:
        return frozenset(v for v, _ in self.exps)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.exps)

    def weight(self, w: WeightAssignment | None = None) -> int:
        f = _weigher(w)
        return sum(e * f(v) for v, e in self.exps)

    def is_squarefree(self) -> bool:
        return all(e == 1 for _, e in self.exps)

    def divides(self, other: Monomial) -> bool:
        o = other.as_dict()
        return all(o.get(v, 0) >= e for v, e in self.exps)

    def lcm(self, other: Monomial) -> Monomial:
        d = self.as_dict()
        for v, e in other.exps:
            d[v] = max(d.get(v, 0), e)
        return Monomial(d)

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(list(self.exps) + list(other.exps))

    def polarize(self) -> Monomial:
        """x_j^e  ->  x_{j,1} x_{j,2} ... x_{j,e}."""
        return Monomial.squarefree(Vertex(j, k) for j, e in self.exps for k in range(1, e + 1))

    def to_dict(self) -> dict:
        def key(v):
            return ",".join(map(str, v)) if isinstance(v, tuple) else str(v)

        return {key(v): e for v, e in self.exps}

    @classmethod
    def from_dict(cls, d: Mapping[str, int]) -> Monomial:
        def var(k: str):
            parts = [int(x) for x in k.split(",")]
            return Vertex(*parts) if len(parts) == 2 else parts[0]

        return cls({var(k): e for k, e in d.items()})

    def __str__(self) -> str:
        if not self.exps:
            return "1"
        out = []
        for v, e in self.exps:
            name = str(v) if isinstance(v, Vertex) else f"x_{v}"
            out.append(name if e == 1 else f"{name}^{e}")
        return "*".join(out)


def minimal_generators(gens: Iterable[Monomial]) -> list[Monomial]:
    gens = sorted(set(gens), key=lambda m: (m.degree, m.exps))
    out: list[Monomial] = []
    for g in gens:
        if not any(h.divides(g) for h in out):
            out.append(g)
    return out


@dataclass(frozen=True)
class EdgeIdeal:
    generators: tuple

    @classmethod
    def of(cls, H: Hypergraph) -> EdgeIdeal:
        return cls(tuple(Monomial.squarefree(e) for e in H.edges))

    def contains(self, m: Monomial) -> bool:
        return any(g.divides(m) for g in self.generators)

    def to_json(self) -> str:
        return json.dumps([g.to_dict() for g in self.generators])

    @classmethod
    def from_json(cls, text: str) -> EdgeIdeal:
        return cls(tuple(Monomial.from_dict(d) for d in json.loads(text)))


# -- the ideal J_{r,i} and its polarization -----------------------------------------


def gordon_ideal_generators(r: int, i: int, max_level: int) -> list[Monomial]:
    """x_1^i and x_l^s x_{l+1}^(r-s) (1 <= s <= r) with every variable index <= max_level."""
    check_params(r, i)
    gens = [Monomial({1: i})]
    for level in range(1, max_level + 1):
        for s in range(1, r + 1):
            if s < r and level + 1 > max_level:
                continue
            gens.append(Monomial({level: s, level + 1: r - s}))
    return gens


def polarized_gordon_ideal(r: int, i: int, max_level: int) -> list[Monomial]:
    return [g.polarize() for g in minimal_generators(gordon_ideal_generators(r, i, max_level))]


def quotient_monomial_series(
    generators: Iterable[Monomial], variables: Iterable[Hashable], w: WeightAssignment | None, trunc: int
) -> TruncatedSeries:
    """Count monomials in the given variables outside the ideal, by weight.

    Depth-first over exponents; pruning is valid because a monomial in the
    ideal has all its multiples in the ideal and weights are positive.
    """
    _check_trunc(trunc)
    f = _weigher(w)
    gens = list(generators)
    vs = [v for v in variables if f(v) <= trunc]
    counts = [0] * (trunc + 1)

    def rec(idx: int, exps: dict, wt: int):
        if idx == len(vs):
            counts[wt] += 1
            return
        v = vs[idx]
        e = 0
        while wt + e * f(v) <= trunc:
            if e:
                exps[v] = e
            mono = Monomial(exps)
            if any(g.divides(mono) for g in gens):
                break
            rec(idx + 1, exps, wt + e * f(v))
            e += 1
        exps.pop(v, None)

    rec(0, {}, 0)
    return TruncatedSeries(tuple(counts))


# -- Hilbert series of edge ideals --------------------------------------------------


def hilbert_numerator_weighted(
    H: Hypergraph, w: WeightAssignment | None, trunc: int, limit: int = BRUTE_FORCE_EDGE_LIMIT
) -> TruncatedSeries:
    """sum over edge subsets F of (-1)^|F| q^{w(union F)}, truncated at q^trunc.

    Edges heavier than ``trunc`` are dropped first: any subset containing one
    has union weight > trunc and cannot touch the kept coefficients.
    """
    _check_trunc(trunc)
    if not H.is_simple():
        raise ValueError("the lcm formula needs a simple hypergraph")
    f = _weigher(w)
    light = [e for e in H.edges if sum(f(v) for v in e) <= trunc]
    if len(light) > limit:
        raise ValueError(f"{len(light)} edges of weight <= {trunc} exceeds the limit of {limit}")
    verts = sorted({v for e in light for v in e}, key=lambda v: H.vertices.index(v))
    sub = Hypergraph(verts, light)
    cover, sign = _union_masks(edge_masks(sub), len(sub.vertices))
    wt = np.zeros(len(cover), dtype=np.int64)
    for idx, v in enumerate(sub.vertices):
        wt += ((cover >> idx) & 1).astype(np.int64) * f(v)
    keep = wt <= trunc
    coeffs = np.zeros(trunc + 1, dtype=np.int64)
    np.add.at(coeffs, wt[keep], sign[keep])
    return TruncatedSeries(tuple(int(c) for c in coeffs))


def vertex_denominator_inverse(weights: Iterable[int], trunc: int, series: TruncatedSeries | None = None) -> TruncatedSeries:
    """Multiply ``series`` (default 1) by prod 1/(1 - q^w) over the given weights."""
    s = TruncatedSeries.one(trunc) if series is None else series
    for k in weights:
        if k <= trunc:
            s = s.mul_inv_one_minus_qk(k)
    return s


def quotient_series_by_support(
    H: Hypergraph, w: WeightAssignment | None, trunc: int, limit: int = 25
) -> TruncatedSeries:
    """Weighted count of monomials outside I(H).

    A monomial avoids I(H) exactly when its support contains no edge, so the
    series is sum over edge-free S of prod_{v in S} q^w(v) / (1 - q^w(v)).
    """
    _check_trunc(trunc)
    if len(H.vertices) > limit:
        raise ValueError(f"{len(H.vertices)} vertices exceeds the support-enumeration limit of {limit}")
    f = _weigher(w)
    vs = list(H.vertices)
    edges = H.edge_sets
    total = TruncatedSeries.zero(trunc)

    def rec(idx: int, chosen: list, wt: int):
        nonlocal total
        if idx == len(vs):
            term = TruncatedSeries.monomial(wt, trunc)
            total = total + vertex_denominator_inverse((f(v) for v in chosen), trunc, term)
            return
        rec(idx + 1, chosen, wt)
        v = vs[idx]
        if wt + f(v) > trunc:
            return
        chosen.append(v)
        s = set(chosen)
        if not any(e <= s for e in edges):
            rec(idx + 1, chosen, wt + f(v))
        chosen.pop()

    rec(0, [], 0)
    return total


def hilbert_series_weighted(H: Hypergraph, w: WeightAssignment | None, trunc: int) -> TruncatedSeries:
    """Numerator over prod (1 - q^w(v))."""
    f = _weigher(w)
    num = hilbert_numerator_weighted(H, w, trunc)
    return vertex_denominator_inverse((f(v) for v in H.vertices), trunc, num)


# -- the graded algebra P_{r,i} ---------------------------------------------------


def _hinf_weights(r: int, i: int, trunc: int) -> list[int]:
    return [1] * i + [j for j in range(2, trunc + 1) for _ in range(r)]


def hp_P_ri(
    r: int, i: int, trunc: int, interp: Interpretation = Interpretation.INDUCED, route: str = "signature"
) -> TruncatedSeries:
    """Hilbert-Poincare series of K[x_{j,k}] / I(H^inf_{r,i}) with x_{j,k} of weight j.

    route="numerator": lcm inclusion-exclusion on H^inf truncated to levels
    <= trunc+1.  route="signature": the signed neighborly series.  Both are
    divided by (1-q)^i prod_{j>=2} (1-q^j)^r.
    """
    check_params(r, i)
    _check_trunc(trunc)
    if route == "numerator":
        num = hilbert_numerator_weighted(truncate_H_infinity(r, i, trunc + 1), None, trunc)
    elif route == "signature":
        num = neighborly_signed_series(r, i, trunc, interp, Method.LEVEL_DP)
    else:
        raise ValueError(f"unknown route {route!r}")
    return vertex_denominator_inverse(_hinf_weights(r, i, trunc), trunc, num)


def hp_quotient_J(r: int, i: int, trunc: int) -> TruncatedSeries:
    """Hilbert-Poincare series of K[x_j] / J_{r,i}, read off as the Gordon B counts."""
    return class_series(PartitionClass.gordon_b(r, i), trunc)


def hp_quotient_J_by_monomials(r: int, i: int, trunc: int) -> TruncatedSeries:
    """Same series, counting standard monomials of J_{r,i} directly."""
    levels = max(trunc, 1)
    return quotient_monomial_series(gordon_ideal_generators(r, i, levels + 1), range(1, levels + 1), lambda j: j, trunc)


def polarization_lhs(r: int, i: int, trunc: int, interp: Interpretation = Interpretation.INDUCED) -> TruncatedSeries:
    """HP_{P_{r,i}} * (1-q)^(i-1) prod_{j>=2} (1-q^j)^(r-1)."""
    s = hp_P_ri(r, i, trunc, interp)
    s = s.mul_one_minus_qk(1, i - 1)
    for j in range(2, trunc + 1):
        s = s.mul_one_minus_qk(j, r - 1)
    return s


def verify_polarization_relation(
    r: int, i: int, trunc: int, interp: Interpretation = Interpretation.INDUCED
) -> VerificationReport:
    lhs = polarization_lhs(r, i, trunc, interp)
    rhs = hp_quotient_J(r, i, trunc)
    return VerificationReport.compare(
        "polarization",
        {"r": r, "i": i, "N": trunc, "interp": interp.value},
        lhs,
        rhs,
        lhs_label="HP_P*(1-q)^(i-1)prod(1-q^j)^(r-1)",
        rhs_label="HP_J",
    )
