"""Integer partitions and the partition classes around Gordon's identities.

Partitions are stored as weakly decreasing tuples.  Every enumerator yields
partitions in lexicographically decreasing order of their part sequences,
so ``5, 4+1, 3+2, 3+1+1, ...``.
"""
from __future__ import annotations

import enum
import json
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterator, Sequence


class Interpretation(enum.Enum):
    """How (r,i)-neighborliness is decided.

    INDUCED: multiplicity bounds hold and the sub-hypergraph of the infinite
    hypergraph induced on the partition's vertices has no isolated vertex.

    DEFINITION: the three window conditions are checked literally on the
    part sequence, and H_lambda gets every window present in the partition.
    """

    INDUCED = "induced"
    DEFINITION = "definition"


@dataclass(frozen=True, order=True)
class Partition:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        for p in parts:
            if p < 1:
                raise ValueError(f"parts must be positive integers, got {parts}")
        for a, b in zip(parts, parts[1:]):
            if a < b:
                raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> Partition:
        """Build from parts in any order."""
        return cls(tuple(sorted(parts, reverse=True)))

    @classmethod
    def from_multiplicities(cls, mult: dict[int, int]) -> Partition:
        parts: list[int] = []
        for j in sorted(mult, reverse=True):
            parts.extend([j] * mult[j])
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> Partition:
        """Parse ``"2,1,1,1"`` or ``"2+1+1+1"``, parts in any order; ``""`` is the empty partition."""
        text = text.strip()
        if text in ("", "()", "[]"):
            return cls(())
        sep = "+" if "+" in text else ","
        try:
            parts = tuple(int(tok) for tok in text.split(sep))
        except ValueError:
            raise ValueError(f"not a partition: {text!r}") from None
        return cls.from_parts(parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    @cached_property
    def _mult(self) -> Counter:
        return Counter(self.parts)

    def multiplicity(self, j: int) -> int:
        return self._mult.get(j, 0)

    def multiplicities(self) -> dict[int, int]:
        """Part value -> number of occurrences, in increasing part order."""
        return dict(sorted(self._mult.items()))

    @property
    def largest(self) -> int:
        return self.parts[0] if self.parts else 0

    def to_csv(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def to_json(self) -> str:
        return json.dumps(list(self.parts))

    @classmethod
    def from_json(cls, text: str) -> Partition:
        data = json.loads(text)
        if not isinstance(data, list):
            raise ValueError("a partition is a JSON array of integers")
        return cls(tuple(data))

    def __str__(self) -> str:
        return "+".join(str(p) for p in self.parts) if self.parts else "()"


class ClassKind(enum.Enum):
    ALL = "all"
    NEIGHBORLY = "neighborly"
    GORDON_B = "gordon-b"
    GORDON_A = "gordon-a"
    DISTINCT_R = "distinct-r"


@dataclass(frozen=True)
class PartitionClass:
    kind: ClassKind
    r: int = 0
    i: int = 0
    interp: Interpretation = field(default=Interpretation.INDUCED, compare=False)

    def __post_init__(self):
        if self.kind is ClassKind.ALL:
            return
        min_r = 2 if self.kind in (ClassKind.GORDON_A, ClassKind.GORDON_B) else 1
        check_params(self.r, self.i, min_r)

    @classmethod
    def all(cls) -> PartitionClass:
        return cls(ClassKind.ALL)

    @classmethod
    def neighborly(cls, r: int, i: int, interp: Interpretation = Interpretation.INDUCED) -> PartitionClass:
        return cls(ClassKind.NEIGHBORLY, r, i, interp)

    @classmethod
    def gordon_b(cls, r: int, i: int) -> PartitionClass:
        return cls(ClassKind.GORDON_B, r, i)

    @classmethod
    def gordon_a(cls, r: int, i: int) -> PartitionClass:
        return cls(ClassKind.GORDON_A, r, i)

    @classmethod
    def distinct_r(cls, r: int, i: int) -> PartitionClass:
        return cls(ClassKind.DISTINCT_R, r, i)

    def contains(self, lam: Partition) -> bool:
        k = self.kind
        if k is ClassKind.ALL:
            return True
        if k is ClassKind.NEIGHBORLY:
            return is_neighborly(lam, self.r, self.i, self.interp)
        if k is ClassKind.GORDON_B:
            return is_gordon_b(lam, self.r, self.i)
        if k is ClassKind.GORDON_A:
            return is_gordon_a(lam, self.r, self.i)
        return is_distinct_r(lam, self.r, self.i)


def check_params(r: int, i: int, min_r: int = 1) -> None:
    if r < min_r:
        raise ValueError(f"r must be >= {min_r}, got r={r}")
    if not 1 <= i <= r:
        raise ValueError(f"need 1 <= i <= r, got r={r}, i={i}")


# -- enumeration --------------------------------------------------------------


def _gen(n: int, largest: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield tuple(prefix)
        return
    for k in range(min(n, largest), 0, -1):
        prefix.append(k)
        yield from _gen(n - k, k, prefix)
        prefix.pop()


@lru_cache(maxsize=64)
def _all_partitions(n: int) -> tuple[Partition, ...]:
    return tuple(Partition(p) for p in _gen(n, n, []))


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n, lexicographically decreasing."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    return list(_all_partitions(n))


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal recurrence (independent of the enumerator)."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def _bounded_gen(n: int, largest: int, prefix: list[int], r: int, i: int) -> Iterator[tuple[int, ...]]:
    # multiplicities: at most i copies of 1, at most r of anything else
    if n == 0:
        yield tuple(prefix)
        return
    for k in range(min(n, largest), 0, -1):
        cap = i if k == 1 else r
        for m in range(min(cap, n // k), 0, -1):
            prefix.extend([k] * m)
            yield from _bounded_gen(n - k * m, k - 1, prefix, r, i)
            del prefix[len(prefix) - m :]


def _distinct_gen(n: int, allowed: list[int], start: int, prefix: list[int]) -> Iterator[tuple[int, ...]]:
    if n == 0:
        yield tuple(prefix)
        return
    for idx in range(start, len(allowed)):
        k = allowed[idx]
        if k > n:
            continue
        prefix.append(k)
        yield from _distinct_gen(n - k, allowed, idx + 1, prefix)
        prefix.pop()


# -- membership predicates ------------------------------------------------------


def multiplicity_bounds_hold(lam: Partition, r: int, i: int) -> bool:
    """m(1) <= i and m(j) <= r for every other part j."""
    for j, m in lam.multiplicities().items():
        if m > (i if j == 1 else r):
            return False
    return True


def has_window(lam: Partition, j: int, r: int) -> bool:
    """Is part j inside some run of r consecutive parts whose spread is at most 1?"""
    p = lam.parts
    for k in range(len(p) - r + 1):
        if p[k] - p[k + r - 1] <= 1 and p[k + r - 1] <= j <= p[k]:
            return True
    return False


def _neighborly_by_definition(lam: Partition, r: int, i: int) -> bool:
    if not multiplicity_bounds_hold(lam, r, i):
        return False
    m1 = lam.multiplicity(1)
    for j in lam.multiplicities():
        if j == 1 and m1 == i:
            continue
        if not has_window(lam, j, r):
            return False
    return True


def is_neighborly(lam: Partition, r: int, i: int, interp: Interpretation = Interpretation.INDUCED) -> bool:
    check_params(r, i)
    if interp is Interpretation.DEFINITION:
        return _neighborly_by_definition(lam, r, i)
    if not multiplicity_bounds_hold(lam, r, i):
        return False
    from .hypergraph import build_H_lambda

    return not build_H_lambda(lam, r, i, interp).isolated_vertices()


def is_gordon_b(lam: Partition, r: int, i: int) -> bool:
    """b_j - b_{j+r-1} >= 2 everywhere and at most i-1 parts equal to 1."""
    p = lam.parts
    if lam.multiplicity(1) > i - 1:
        return False
    return all(p[j] - p[j + r - 1] >= 2 for j in range(len(p) - r + 1))


def is_gordon_a(lam: Partition, r: int, i: int) -> bool:
    m = 2 * r + 1
    bad = {0, i % m, (-i) % m}
    return all(p % m not in bad for p in lam.parts)


def is_distinct_r(lam: Partition, r: int, i: int) -> bool:
    m = 2 * r + 1
    good = {0, i % m, (-i) % m}
    p = lam.parts
    return len(set(p)) == len(p) and all(x % m in good for x in p)


# -- class-level API ------------------------------------------------------------


def enumerate_class(n: int, cls: PartitionClass) -> list[Partition]:
    """Members of ``cls`` of weight n, lexicographically decreasing."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    k = cls.kind
    if k is ClassKind.ALL:
        return enumerate_partitions(n)
    if k is ClassKind.NEIGHBORLY:
        # only partitions meeting the multiplicity bounds can qualify
        cands = (Partition(p) for p in _bounded_gen(n, n, [], cls.r, cls.i))
        return [lam for lam in cands if is_neighborly(lam, cls.r, cls.i, cls.interp)]
    if k is ClassKind.DISTINCT_R:
        allowed = [j for j in range(n, 0, -1) if is_distinct_r(Partition((j,)), cls.r, cls.i)]
        return [Partition(p) for p in _distinct_gen(n, allowed, 0, [])]
    return [lam for lam in enumerate_partitions(n) if cls.contains(lam)]


def count_class(n: int, cls: PartitionClass) -> int:
    return len(enumerate_class(n, cls))


def signed_count_R(n: int, r: int, i: int) -> int:
    """sum over distinct-part partitions of n into parts = 0, +-i (mod 2r+1) of (-1)^length."""
    return sum((-1) ** len(lam) for lam in enumerate_class(n, PartitionClass.distinct_r(r, i)))
