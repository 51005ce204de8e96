"""Finite hypergraphs, the hypergraph H_lambda of a partition, and truncations
of the infinite hypergraph H^inf_{r,i}.

Vertices of the partition hypergraphs are ``Vertex(level, copy)``; the vertex
x_{j,k} stands for the k-th copy of the part j and carries weight j.  The
generic :class:`Hypergraph` accepts any hashable, mutually comparable vertex
labels so small hand-made examples can use ints or strings.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Hashable, Iterable, NamedTuple

from .partitions import Interpretation, Partition, check_params, multiplicity_bounds_hold


class Vertex(NamedTuple):
    level: int
    copy: int

    def __str__(self) -> str:
        return f"x_{{{self.level},{self.copy}}}"


def _key(v):
    # lets ints, strings and Vertex tuples sort deterministically
    return (0, v) if isinstance(v, tuple) else (1, str(type(v).__name__), v)


def _sorted(vs: Iterable) -> tuple:
    return tuple(sorted(vs, key=_key))


@dataclass(frozen=True)
class Hypergraph:
    vertices: tuple
    edges: tuple

    def __init__(self, vertices: Iterable[Hashable] = (), edges: Iterable[Iterable[Hashable]] = ()):
        vset = set(vertices)
        canon = set()
        for e in edges:
            fe = frozenset(e)
            if not fe:
                raise ValueError("edges must be nonempty")
            if not fe <= vset:
                missing = _sorted(fe - vset)
                raise ValueError(f"edge uses vertices not in the hypergraph: {missing}")
            canon.add(_sorted(fe))
        object.__setattr__(self, "vertices", _sorted(vset))
        object.__setattr__(self, "edges", tuple(sorted(canon, key=lambda e: [_key(v) for v in e])))

    @property
    def edge_sets(self) -> list[frozenset]:
        return [frozenset(e) for e in self.edges]

    def is_simple(self) -> bool:
        es = self.edge_sets
        for a in range(len(es)):
            for b in range(len(es)):
                if a != b and es[a] <= es[b]:
                    return False
        return True

    def degrees(self) -> dict:
        deg = {v: 0 for v in self.vertices}
        for e in self.edges:
            for v in e:
                deg[v] += 1
        return deg

    def isolated_vertices(self) -> set:
        return {v for v, d in self.degrees().items() if d == 0}

    def induced_on_vertices(self, subset: Iterable[Hashable]) -> Hypergraph:
        w = set(subset)
        if not w <= set(self.vertices):
            raise ValueError("vertex subset is not contained in the hypergraph")
        return Hypergraph(w, [e for e in self.edges if set(e) <= w])

    def spanned_by_edges(self, edge_subset: Iterable[Iterable[Hashable]]) -> Hypergraph:
        own = set(self.edge_sets)
        chosen = [frozenset(e) for e in edge_subset]
        for e in chosen:
            if e not in own:
                raise ValueError(f"{_sorted(e)} is not an edge of the hypergraph")
        verts = set().union(*chosen) if chosen else set()
        return Hypergraph(verts, chosen)

    # -- serialization --------------------------------------------------------

    def to_dict(self) -> dict:
        def enc(v):
            return list(v) if isinstance(v, tuple) else v

        return {
            "vertices": [enc(v) for v in self.vertices],
            "edges": [[enc(v) for v in e] for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> Hypergraph:
        def dec(v):
            return Vertex(*v) if isinstance(v, list) else v

        return cls((dec(v) for v in data["vertices"]), ([dec(v) for v in e] for e in data["edges"]))

    @classmethod
    def from_json(cls, text: str) -> Hypergraph:
        return cls.from_dict(json.loads(text))

    def paoh(self) -> str:
        """ASCII Parallel Aggregated Ordered Hypergraph: a row per vertex, a column per edge."""
        if not self.vertices:
            return "(empty hypergraph)\n"
        labels = [str(v) for v in self.vertices]
        width = max(len(s) for s in labels)
        row_of = {v: n for n, v in enumerate(self.vertices)}
        cols = []
        for e in self.edges:
            rows = sorted(row_of[v] for v in e)
            col = []
            for n in range(len(self.vertices)):
                if n in rows:
                    col.append("●")
                elif rows[0] < n < rows[-1]:
                    col.append("│")
                else:
                    col.append(" ")
            cols.append(col)
        lines = []
        for n, lab in enumerate(labels):
            cells = " ".join(c[n] for c in cols)
            lines.append(f"{lab.rjust(width)} {cells}".rstrip())
        return "\n".join(lines) + "\n"


def vertex_weight(v: Vertex) -> int:
    """x_{j,k} -> j."""
    return v.level


# -- partition hypergraphs ------------------------------------------------------


def partition_vertices(lam: Partition) -> list[Vertex]:
    return [Vertex(j, k) for j, m in lam.multiplicities().items() for k in range(1, m + 1)]


def partition_from_vertices(vertices: Iterable[Vertex]) -> Partition:
    """Inverse of :func:`partition_vertices`; the copies of each level must form a prefix 1..m."""
    by_level: dict[int, list[int]] = {}
    for v in vertices:
        by_level.setdefault(v.level, []).append(v.copy)
    mult = {}
    for j, ks in by_level.items():
        if sorted(ks) != list(range(1, len(ks) + 1)):
            raise ValueError(f"copies at level {j} are not a prefix: {sorted(ks)}")
        mult[j] = len(ks)
    return Partition.from_multiplicities(mult)


def window_edge(level: int, s: int, r: int) -> tuple[Vertex, ...]:
    """(x_{l,1},...,x_{l,s}, x_{l+1,1},...,x_{l+1,r-s})."""
    return tuple(Vertex(level, k) for k in range(1, s + 1)) + tuple(
        Vertex(level + 1, k) for k in range(1, r - s + 1)
    )


def special_edge(i: int) -> tuple[Vertex, ...]:
    return tuple(Vertex(1, k) for k in range(1, i + 1))


def window_range(level: int, r: int, i: int, interp: Interpretation) -> range:
    """Admissible s for windows starting at ``level``.

    In H^inf the level-1 windows stop at s = i-1; the window with s = i would
    contain the special edge.  Under the literal definition every s is kept.
    """
    if level == 1 and interp is Interpretation.INDUCED:
        return range(1, i)
    return range(1, r + 1)


def lambda_edges(lam: Partition, r: int, i: int, interp: Interpretation) -> list[tuple[Vertex, ...]]:
    m = lam.multiplicity
    edges = []
    for level in lam.multiplicities():
        for s in window_range(level, r, i, interp):
            if m(level) >= s and m(level + 1) >= r - s:
                edges.append(window_edge(level, s, r))
    if m(1) == i:
        edges.append(special_edge(i))
    return edges


def build_H_lambda(
    lam: Partition, r: int, i: int, interp: Interpretation = Interpretation.INDUCED
) -> Hypergraph:
    check_params(r, i)
    if not multiplicity_bounds_hold(lam, r, i):
        raise ValueError(f"{lam} breaks the multiplicity bounds m(1) <= {i}, m(j) <= {r}")
    return Hypergraph(partition_vertices(lam), lambda_edges(lam, r, i, interp))


def h_infinity_vertices(r: int, i: int, max_level: int) -> list[Vertex]:
    vs = [Vertex(1, k) for k in range(1, i + 1)]
    for j in range(2, max_level + 1):
        vs.extend(Vertex(j, k) for k in range(1, r + 1))
    return vs


def truncate_H_infinity(r: int, i: int, max_level: int) -> Hypergraph:
    """Sub-hypergraph of H^inf_{r,i} induced on the levels 1..max_level."""
    check_params(r, i)
    if max_level < 1:
        raise ValueError(f"max_level must be >= 1, got {max_level}")
    edges = [special_edge(i)]
    for level in range(1, max_level):
        for s in window_range(level, r, i, Interpretation.INDUCED):
            edges.append(window_edge(level, s, r))
    # the all-equal window at the top level has no level above it
    if max_level >= 2:
        edges.append(window_edge(max_level, r, r))
    return Hypergraph(h_infinity_vertices(r, i, max_level), edges)
