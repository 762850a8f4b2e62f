"""Persistent store for Kazhdan-Lusztig elements.

One JSON file, keyed ``"n:w1,w2,..."``, each value a map from the one-line
notation of ``y`` to the coefficient of ``H_y``.  The cache is purely an
optimization: a missing or unreadable file only costs recomputation.
"""

import json
import logging
import os
import tempfile
from pathlib import Path

from . import hecke as hk
from . import symgroup as sg
from .laurent import LaurentPoly

__all__ = ["default_path", "load", "save", "ENV_VAR"]

ENV_VAR = "CANONTL_CACHE"
log = logging.getLogger(__name__)


def default_path():
    env = os.environ.get(ENV_VAR)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or Path.home() / ".cache"
    return Path(base) / "canontl" / "kl.json"


def _perm(text):
    return sg.Permutation(int(x) for x in text.split(","))


def load(path):
    """Merge the cache file into the in-memory table; returns the entry count."""
    path = Path(path)
    if not path.exists():
        return 0
    try:
        data = json.loads(path.read_text())
        entries = {}
        for key, coords in data.items():
            n, w = key.split(":")
            w = _perm(w)
            if len(w) != int(n):
                raise ValueError(f"bad key {key!r}")
            entries[(int(n), w)] = {_perm(y): LaurentPoly.from_json(c) for y, c in coords.items()}
    except (OSError, ValueError, AttributeError, TypeError) as exc:
        log.warning("ignoring unreadable KL cache %s (%s)", path, exc)
        return 0
    for key, coords in entries.items():
        hk.kl_memo.setdefault(key, coords)
    return len(entries)


def save(path):
    """Write the in-memory table atomically (temp file + rename)."""
    path = Path(path)
    data = {}
    for (n, w), coords in sorted(hk.kl_memo.items(), key=lambda kv: (kv[0][0], sg.sort_key(kv[0][1]))):
        data[f"{n}:{','.join(map(str, w))}"] = {
            ",".join(map(str, y)): coords[y].to_json() for y in sorted(coords, key=sg.sort_key)}
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".kl-", suffix=".json")
        with os.fdopen(fd, "w") as fh:
            json.dump(data, fh, sort_keys=True)
        os.replace(tmp, path)
    except OSError as exc:
        log.warning("could not write KL cache %s (%s)", path, exc)
        return False
    return True
