"""The signature delta(lambda) and the signed neighborly series.

delta(lambda) is the signed count of edge subsets of H_lambda whose union
covers every vertex.  Two independent routes are provided:

* :func:`signature_bruteforce` walks all 2^|E| edge subsets.
* :func:`signature_fast` uses the vertex-side form

      sum_{F : union F = V} (-1)^|F|  =  (-1)^|V| sum_{W subset V, W edge-free} (-1)^|W|

  (Moebius inversion on the union).  Every edge of H_lambda uses copies
  1..s of one level and 1..r-s of the next, so whether W contains an edge
  only depends on the prefix length p_l of W at each level l (the largest p
  with x_{l,1..p} all in W).  A transfer over levels with state p_l gives
  delta in O(levels * r^2) steps.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import comb
from typing import Optional

import numpy as np

from .hypergraph import Hypergraph, build_H_lambda, window_range
from .partitions import Interpretation, Partition, PartitionClass, enumerate_class, is_neighborly
from .qseries import TruncatedSeries

BRUTE_FORCE_EDGE_LIMIT = 25


class Method(enum.Enum):
    BRUTE_FORCE = "brute"
    LEVEL_DP = "dp"


@dataclass(frozen=True)
class SignatureResult:
    value: int
    method: Method
    edge_count: int
    spanning_subset_count: Optional[int] = None

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "method": self.method.value,
            "edge_count": self.edge_count,
            "spanning_subset_count": self.spanning_subset_count,
        }


def _union_masks(edge_masks: list[int], nverts: int):
    """Union mask and sign of every edge subset, indexed by the subset bitmask."""
    if nverts <= 62:
        cover = np.zeros(1, dtype=np.int64)
        sign = np.ones(1, dtype=np.int64)
        for em in edge_masks:
            cover = np.concatenate([cover, cover | np.int64(em)])
            sign = np.concatenate([sign, -sign])
        return cover, sign
    # too many vertices for int64 bitmasks
    cover_l, sign_l = [0], [1]
    for em in edge_masks:
        cover_l = cover_l + [c | em for c in cover_l]
        sign_l = sign_l + [-s for s in sign_l]
    return np.array(cover_l, dtype=object), np.array(sign_l, dtype=np.int64)


def edge_masks(H: Hypergraph) -> list[int]:
    index = {v: n for n, v in enumerate(H.vertices)}
    return [sum(1 << index[v] for v in e) for e in H.edges]


def signature_bruteforce(H: Hypergraph, limit: int = BRUTE_FORCE_EDGE_LIMIT) -> SignatureResult:
    """Sum of (-1)^|F| over all edge subsets F whose union is V(H).

    The empty hypergraph gives 1: the empty subset covers the empty vertex set.
    """
    ne = len(H.edges)
    if ne > limit:
        raise ValueError(f"{ne} edges exceeds the brute-force limit of {limit}")
    full = (1 << len(H.vertices)) - 1
    cover, sign = _union_masks(edge_masks(H), len(H.vertices))
    hit = cover == full
    return SignatureResult(
        value=int(sign[hit].sum()),
        method=Method.BRUTE_FORCE,
        edge_count=ne,
        spanning_subset_count=int(np.count_nonzero(hit)),
    )


def signature_vertex_side(H: Hypergraph) -> int:
    """(-1)^|V| times the signed count of vertex subsets containing no edge.

    Plain enumeration of the 2^|V| vertex subsets; used only as a check.
    """
    nv = len(H.vertices)
    masks = edge_masks(H)
    total = 0
    for w in range(1 << nv):
        if any(em & w == em for em in masks):
            continue
        total += -1 if bin(w).count("1") % 2 else 1
    return total if nv % 2 == 0 else -total


# -- level dynamic program --------------------------------------------------------


def prefix_weight(m: int, p: int) -> int:
    """Signed count of subsets W of {1..m} whose exact prefix length is p.

    W contains 1..p and (if p < m) misses p+1; the remaining m-p-1 copies are
    free, so subsets of size t number C(m-p-1, t-p).
    """
    if p == m:
        return (-1) ** m
    free = m - p - 1
    return sum(comb(free, t - p) * (-1) ** t for t in range(p, m))


def _level_windows(lam: Partition, r: int, i: int, interp: Interpretation) -> dict[int, list[int]]:
    """level -> list of s for which the window edge at that level is in H_lambda."""
    m = lam.multiplicity
    out: dict[int, list[int]] = {}
    for level in lam.multiplicities():
        ss = [s for s in window_range(level, r, i, interp) if m(level) >= s and m(level + 1) >= r - s]
        if ss:
            out[level] = ss
    return out


def signature_fast(
    lam: Partition, r: int, i: int, interp: Interpretation = Interpretation.INDUCED
) -> SignatureResult:
    if not is_neighborly(lam, r, i, interp):
        raise ValueError(f"{lam} is not ({r},{i})-neighborly under the {interp.value} interpretation")
    m = lam.multiplicity
    windows = _level_windows(lam, r, i, interp)
    has_special = m(1) == i
    edge_count = sum(len(v) for v in windows.values()) + int(has_special)
    if not lam.parts:
        return SignatureResult(1, Method.LEVEL_DP, 0)

    def blocked(level: int, p: int, p_next: int) -> bool:
        return any(s <= p and r - s <= p_next for s in windows.get(level, ()))

    # state: prefix length at the current level -> signed weight
    m1 = m(1)
    dp = {p: prefix_weight(m1, p) for p in range(m1 + 1) if not (has_special and p >= i)}
    top = lam.largest
    for level in range(1, top + 1):
        mn = m(level + 1)
        nxt: dict[int, int] = {}
        for pn in range(mn + 1):
            wt = prefix_weight(mn, pn)
            if wt == 0:
                continue
            acc = sum(v for p, v in dp.items() if v and not blocked(level, p, pn))
            if acc:
                nxt[pn] = acc * wt
        dp = nxt
    total = sum(dp.values())
    value = total if len(lam) % 2 == 0 else -total
    return SignatureResult(value, Method.LEVEL_DP, edge_count)


def signature(
    lam: Partition,
    r: int,
    i: int,
    interp: Interpretation = Interpretation.INDUCED,
    method: Method = Method.LEVEL_DP,
) -> SignatureResult:
    if method is Method.LEVEL_DP:
        return signature_fast(lam, r, i, interp)
    if not is_neighborly(lam, r, i, interp):
        raise ValueError(f"{lam} is not ({r},{i})-neighborly under the {interp.value} interpretation")
    return signature_bruteforce(build_H_lambda(lam, r, i, interp))


def neighborly_signed_series(
    r: int,
    i: int,
    trunc: int,
    interp: Interpretation = Interpretation.INDUCED,
    method: Method = Method.LEVEL_DP,
) -> TruncatedSeries:
    """sum over neighborly lambda with |lambda| <= trunc of delta(lambda) q^|lambda|."""
    if trunc < 0:
        raise ValueError(f"truncation order must be >= 0, got {trunc}")
    cls = PartitionClass.neighborly(r, i, interp)
    coeffs = []
    for n in range(trunc + 1):
        coeffs.append(sum(signature(lam, r, i, interp, method).value for lam in enumerate_class(n, cls)))
    return TruncatedSeries(tuple(coeffs))
