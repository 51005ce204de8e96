"""Coefficient-by-coefficient comparison reports."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .qseries import TruncatedSeries


@dataclass
class VerificationReport:
    identity: str
    params: dict
    rows: list[tuple[int, int, int, bool]]
    lhs_label: str = "lhs"
    rhs_label: str = "rhs"
    details: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def __post_init__(self):
        ns = [row[0] for row in self.rows]
        if ns != list(range(len(ns))):
            raise ValueError("report rows must cover n = 0..N without gaps")

    @property
    def passed(self) -> bool:
        return all(row[3] for row in self.rows)

    @property
    def first_failure(self) -> Optional[int]:
        for n, _, _, ok in self.rows:
            if not ok:
                return n
        return None

    @classmethod
    def compare(
        cls,
        identity: str,
        params: dict,
        lhs: TruncatedSeries | Sequence[int],
        rhs: TruncatedSeries | Sequence[int],
        lhs_label: str = "lhs",
        rhs_label: str = "rhs",
        **details,
    ) -> VerificationReport:
        a, b = list(lhs), list(rhs)
        if len(a) != len(b):
            raise ValueError(f"series lengths differ: {len(a)} vs {len(b)}")
        rows = [(n, x, y, x == y) for n, (x, y) in enumerate(zip(a, b))]
        return cls(identity, dict(params), rows, lhs_label, rhs_label, dict(details))

    def to_dict(self, with_timing: bool = False) -> dict:
        d = {
            "identity": self.identity,
            "params": self.params,
            "columns": ["n", self.lhs_label, self.rhs_label, "equal"],
            "rows": [list(row) for row in self.rows],
            "pass": self.passed,
            "first_failure": self.first_failure,
            "details": self.details,
        }
        if with_timing:
            d["elapsed_seconds"] = round(self.elapsed, 6)
        return d

    def to_json(self, with_timing: bool = False) -> str:
        return json.dumps(self.to_dict(with_timing), indent=2)

    @classmethod
    def from_dict(cls, d: dict) -> VerificationReport:
        rows = [(int(n), int(a), int(b), bool(ok)) for n, a, b, ok in d["rows"]]
        _, lhs_label, rhs_label, _ = d["columns"]
        rep = cls(d["identity"], d["params"], rows, lhs_label, rhs_label, d.get("details", {}))
        rep.elapsed = d.get("elapsed_seconds", 0.0)
        return rep

    def to_text(self, with_timing: bool = False) -> str:
        head = ["n", self.lhs_label, self.rhs_label, "equal"]
        body = [[str(n), str(a), str(b), "yes" if ok else "NO"] for n, a, b, ok in self.rows]
        widths = [max(len(r[c]) for r in [head] + body) for c in range(4)]
        fmt = "  ".join("{:>%d}" % w for w in widths)
        params = " ".join(f"{k}={v}" for k, v in self.params.items())
        lines = [f"identity: {self.identity}", f"params: {params}", fmt.format(*head)]
        lines.extend(fmt.format(*r) for r in body)
        for k, v in self.details.items():
            lines.append(f"{k}: {v}")
        if with_timing:
            lines.append(f"elapsed: {self.elapsed:.3f}s")
        if self.passed:
            lines.append("result: PASS")
        else:
            lines.append(f"result: FAIL (first mismatch at n={self.first_failure})")
        return "\n".join(lines) + "\n"
