"""On-disk cache of computed series.

Entries are JSON files keyed by (which, r, i, N, interp) and carry a sha256
of the canonical coefficient list.  A hit whose checksum does not match is
treated as a miss and overwritten.  Writes go to a temp file in the same
directory followed by an atomic rename.
"""
from __future__ import annotations

import hashlib
import json
import logging
import os
import tempfile
from pathlib import Path
from typing import Callable, Optional

from .qseries import TruncatedSeries

ENV_VAR = "GORDONLAB_CACHE"

log = logging.getLogger(__name__)


def resolve_cache_dir(cli_value: Optional[str]) -> Optional[Path]:
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    return Path(cli_value) if cli_value else None


def checksum(series: TruncatedSeries) -> str:
    payload = json.dumps(series.to_dict(), sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(payload.encode()).hexdigest()


def _entry_path(cache_dir: Path, which: str, r: int, i: int, trunc: int, interp: str) -> Path:
    return cache_dir / f"{which}_r{r}_i{i}_N{trunc}_{interp}.json"


def load(cache_dir: Path, which: str, r: int, i: int, trunc: int, interp: str) -> Optional[TruncatedSeries]:
    path = _entry_path(cache_dir, which, r, i, trunc, interp)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
        series = TruncatedSeries.from_dict(data["series"])
    except (OSError, ValueError, KeyError, TypeError):
        return None
    key = data.get("key", {})
    if key != {"which": which, "r": r, "i": i, "N": trunc, "interp": interp}:
        return None
    if data.get("sha256") != checksum(series):
        log.warning("checksum mismatch in %s, recomputing", path)
        return None
    return series


def store(cache_dir: Path, which: str, r: int, i: int, trunc: int, interp: str, series: TruncatedSeries) -> Path:
    cache_dir.mkdir(parents=True, exist_ok=True)
    path = _entry_path(cache_dir, which, r, i, trunc, interp)
    data = {
        "key": {"which": which, "r": r, "i": i, "N": trunc, "interp": interp},
        "series": series.to_dict(),
        "sha256": checksum(series),
    }
    fd, tmp = tempfile.mkstemp(dir=cache_dir, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(data, fh)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise
    return path


def cached(
    cache_dir: Optional[Path], which: str, r: int, i: int, trunc: int, interp: str, compute: Callable[[], TruncatedSeries]
) -> TruncatedSeries:
    if cache_dir is None:
        return compute()
    hit = load(cache_dir, which, r, i, trunc, interp)
    if hit is not None:
        return hit
    series = compute()
    store(cache_dir, which, r, i, trunc, interp, series)
    return series
