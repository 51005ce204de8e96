"""Truncated power series in q with exact integer coefficients.

Everything here works modulo q^(N+1).  The only division supported is by
factors of the form (1 - q^k), which covers every denominator needed for
the Gordon-type products and q-Pochhammer symbols.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Iterable, Sequence


@dataclass(frozen=True)
class TruncatedSeries:
    """Power series c_0 + c_1 q + ... + c_N q^N, known exactly up to q^N."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) == 0:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    # -- constructors -------------------------------------------------------

    @classmethod
    def one(cls, trunc: int) -> TruncatedSeries:
        _check_trunc(trunc)
        return cls((1,) + (0,) * trunc)

    @classmethod
    def zero(cls, trunc: int) -> TruncatedSeries:
        _check_trunc(trunc)
        return cls((0,) * (trunc + 1))

    @classmethod
    def monomial(cls, exponent: int, trunc: int, coeff: int = 1) -> TruncatedSeries:
        _check_trunc(trunc)
        c = [0] * (trunc + 1)
        if 0 <= exponent <= trunc:
            c[exponent] = coeff
        return cls(tuple(c))

    @classmethod
    def from_coeffs(cls, coeffs: Sequence[int], trunc: int | None = None) -> TruncatedSeries:
        """Build from a coefficient list, padding or cutting to ``trunc``."""
        if trunc is None:
            trunc = len(coeffs) - 1
        _check_trunc(trunc)
        c = list(coeffs[: trunc + 1])
        c.extend([0] * (trunc + 1 - len(c)))
        return cls(tuple(c))

    # -- basic access -------------------------------------------------------

    @property
    def trunc(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.trunc:
            raise IndexError(f"coefficient q^{n} is beyond truncation order {self.trunc}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def restrict(self, trunc: int) -> TruncatedSeries:
        if trunc > self.trunc:
            raise ValueError(f"cannot extend a series known to q^{self.trunc} up to q^{trunc}")
        _check_trunc(trunc)
        return TruncatedSeries(self.coeffs[: trunc + 1])

    # -- ring operations ----------------------------------------------------

    def _aligned(self, other: TruncatedSeries) -> tuple[tuple[int, ...], tuple[int, ...]]:
        n = min(self.trunc, other.trunc) + 1
        return self.coeffs[:n], other.coeffs[:n]

    def __add__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._aligned(other)
        return TruncatedSeries(tuple(x + y for x, y in zip(a, b)))

    def __sub__(self, other: TruncatedSeries) -> TruncatedSeries:
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._aligned(other)
        return TruncatedSeries(tuple(x - y for x, y in zip(a, b)))

    def __neg__(self) -> TruncatedSeries:
        return TruncatedSeries(tuple(-x for x in self.coeffs))

    def __mul__(self, other) -> TruncatedSeries:
        if isinstance(other, int):
            return TruncatedSeries(tuple(other * x for x in self.coeffs))
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        a, b = self._aligned(other)
        n = len(a)
        out = [0] * n
        for i, x in enumerate(a):
            if x == 0:
                continue
            for j in range(n - i):
                y = b[j]
                if y:
                    out[i + j] += x * y
        return TruncatedSeries(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> TruncatedSeries:
        """Multiply by q^k (k >= 0)."""
        if k < 0:
            raise ValueError("negative shifts are not power series")
        n = len(self.coeffs)
        return TruncatedSeries((0,) * min(k, n) + self.coeffs[: max(n - k, 0)])

    def mul_one_minus_qk(self, k: int, power: int = 1) -> TruncatedSeries:
        """Multiply by (1 - q^k)^power."""
        _check_k(k)
        c = list(self.coeffs)
        for _ in range(power):
            for n in range(len(c) - 1, k - 1, -1):
                c[n] -= c[n - k]
        return TruncatedSeries(tuple(c))

    def mul_inv_one_minus_qk(self, k: int, power: int = 1) -> TruncatedSeries:
        """Divide by (1 - q^k)^power using stride-k prefix sums."""
        _check_k(k)
        c = list(self.coeffs)
        for _ in range(power):
            for n in range(k, len(c)):
                c[n] += c[n - k]
        return TruncatedSeries(tuple(c))

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {"trunc": self.trunc, "coeffs": list(self.coeffs)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> TruncatedSeries:
        trunc = data["trunc"]
        coeffs = data["coeffs"]
        if len(coeffs) != trunc + 1:
            raise ValueError(f"expected {trunc + 1} coefficients, got {len(coeffs)}")
        if not all(isinstance(c, int) and not isinstance(c, bool) for c in coeffs):
            raise ValueError("coefficients must be integers")
        return cls(tuple(coeffs))

    @classmethod
    def from_json(cls, text: str) -> TruncatedSeries:
        return cls.from_dict(json.loads(text))

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "coefficient"])
        for n, c in enumerate(self.coeffs):
            w.writerow([n, c])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> TruncatedSeries:
        rows = list(csv.reader(io.StringIO(text)))
        if not rows or rows[0] != ["n", "coefficient"]:
            raise ValueError("missing 'n,coefficient' header")
        coeffs = []
        for expected, (n, c) in enumerate(rows[1:]):
            if int(n) != expected:
                raise ValueError(f"row for q^{n} out of order, expected q^{expected}")
            coeffs.append(int(c))
        return cls(tuple(coeffs))

    def __str__(self) -> str:
        terms = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                terms.append(str(c))
            else:
                mag = "" if abs(c) == 1 else str(abs(c))
                q = "q" if n == 1 else f"q^{n}"
                terms.append(("-" if c < 0 else "+") + mag + q)
        body = " ".join(terms) if terms else "0"
        return f"{body.lstrip('+')} + O(q^{self.trunc + 1})"


def _check_trunc(trunc: int) -> None:
    if trunc < 0:
        raise ValueError(f"truncation order must be >= 0, got {trunc}")


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"(1 - q^k) needs k >= 1, got {k}")


def _check_ri(r: int, i: int, min_r: int = 1) -> None:
    if r < min_r:
        raise ValueError(f"r must be >= {min_r}, got {r}")
    if not 1 <= i <= r:
        raise ValueError(f"need 1 <= i <= r, got r={r}, i={i}")


def is_excluded_residue(j: int, r: int, i: int) -> bool:
    """True when j is congruent to 0, i or -i modulo 2r+1."""
    m = 2 * r + 1
    return j % m in (0, i % m, (-i) % m)


def product_of_one_minus(exponents: Iterable[int], trunc: int) -> TruncatedSeries:
    s = TruncatedSeries.one(trunc)
    for k in exponents:
        if k <= trunc:
            s = s.mul_one_minus_qk(k)
    return s


def product_side(r: int, i: int, trunc: int) -> TruncatedSeries:
    """prod over j = 0, +-i (mod 2r+1) of (1 - q^j), truncated at q^trunc."""
    _check_ri(r, i)
    _check_trunc(trunc)
    return product_of_one_minus(
        (j for j in range(1, trunc + 1) if is_excluded_residue(j, r, i)), trunc
    )


def euler_partition_series(trunc: int) -> TruncatedSeries:
    """prod_{j>=1} 1/(1 - q^j): the generating series of p(n)."""
    s = TruncatedSeries.one(trunc)
    for k in range(1, trunc + 1):
        s = s.mul_inv_one_minus_qk(k)
    return s


def andrews_gordon_product_side(r: int, i: int, trunc: int) -> TruncatedSeries:
    """Right member of the Andrews-Gordon identity, with the obvious cancellation done."""
    _check_ri(r, i, min_r=2)
    _check_trunc(trunc)
    s = TruncatedSeries.one(trunc)
    for n in range(1, trunc + 1):
        if not is_excluded_residue(n, r, i):
            s = s.mul_inv_one_minus_qk(n)
    return s


def _decreasing_tuples(length: int, exponent_of, bound: int):
    """Yield weakly decreasing (N_1 >= ... >= N_length >= 0) with exponent_of(prefix) <= bound.

    ``exponent_of`` must be monotone in every entry so a partial tuple padded
    with zeros gives a lower bound for all of its completions.
    """

    def rec(prefix: list[int], cap: int):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        pad = length - len(prefix) - 1
        v = 0
        while v <= cap:
            if exponent_of(prefix + [v] + [0] * pad) > bound:
                break
            yield from rec(prefix + [v], v)
            v += 1

    # N_1 <= sqrt(bound) since N_1^2 alone already appears in the exponent.
    top = 0
    while (top + 1) ** 2 <= bound:
        top += 1
    yield from rec([], top)


def andrews_gordon_sum_side(r: int, i: int, trunc: int) -> TruncatedSeries:
    """Multisum member: sum q^(N_1^2+...+N_{r-1}^2 + N_i+...+N_{r-1}) / ((q)_{n_1}...(q)_{n_{r-1}})."""
    _check_ri(r, i, min_r=2)
    _check_trunc(trunc)

    def exponent(big_n: Sequence[int]) -> int:
        # big_n is 0-indexed: big_n[j-1] = N_j
        return sum(x * x for x in big_n) + sum(big_n[i - 1 :])

    total = TruncatedSeries.zero(trunc)
    for big_n in _decreasing_tuples(r - 1, exponent, trunc):
        term = TruncatedSeries.monomial(exponent(big_n), trunc)
        small_n = [big_n[j] - (big_n[j + 1] if j + 1 < len(big_n) else 0) for j in range(len(big_n))]
        for nj in small_n:
            for k in range(1, nj + 1):
                term = term.mul_inv_one_minus_qk(k)
        total = total + term
    return total


def class_series(cls, trunc: int, signed: bool = False) -> TruncatedSeries:
    """sum over n <= trunc of (number of members of ``cls`` of weight n) q^n.

    With ``signed=True`` each member counts (-1)^length instead of 1.
    """
    from .partitions import enumerate_class

    _check_trunc(trunc)
    coeffs = []
    for n in range(trunc + 1):
        members = enumerate_class(n, cls)
        coeffs.append(sum((-1) ** len(lam) for lam in members) if signed else len(members))
    return TruncatedSeries(tuple(coeffs))
