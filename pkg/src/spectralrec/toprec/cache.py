"""Optional on-disk persistence of the W_{g,n} memo.

Records are an 8-byte big-endian length followed by canonical JSON of
``{"key": {...}, "value": <multidifferential>}``.  The file name carries the
package version, so a version bump is a clean miss.
"""

import os
import struct
from pathlib import Path

from .. import __version__

ENV_VAR = "SPECTRALREC_CACHE_DIR"
_HEADER = struct.Struct(">Q")


def cache_path(directory=None):
    directory = directory or os.environ.get(ENV_VAR)
    if not directory:
        return None
    return Path(directory) / f"toprec-v{__version__}.cache"


def _key(engine, g, n):
    return {"curve": engine.curve.curve_id, "g": g, "n": n, "ineffective": engine.include_ineffective}


def read_records(path):
    import json

    out = []
    if path is None or not path.exists():
        return out
    data = path.read_bytes()
    pos = 0
    while pos + _HEADER.size <= len(data):
        (size,) = _HEADER.unpack_from(data, pos)
        pos += _HEADER.size
        if pos + size > len(data):
            break  # truncated tail from an interrupted write
        out.append(json.loads(data[pos : pos + size].decode("utf-8")))
        pos += size
    return out


def load_into(engine, directory=None) -> int:
    """Fill the engine memo from disk; returns the number of entries loaded."""
    from ..serialize import dec_multidiff

    path = cache_path(directory)
    count = 0
    for rec in read_records(path):
        k = rec["key"]
        if k["curve"] != engine.curve.curve_id or k["ineffective"] != engine.include_ineffective:
            continue
        key = (k["g"], k["n"])
        if key not in engine.memo:
            engine.memo[key] = dec_multidiff(rec["value"]).terms
            count += 1
    return count


def save_from(engine, directory=None) -> int:
    """Append memo entries not yet on disk."""
    from ..serialize import canonical, enc_multidiff
    from .multidiff import MultiDifferential

    path = cache_path(directory)
    if path is None:
        return 0
    path.parent.mkdir(parents=True, exist_ok=True)
    have = {
        (r["key"]["g"], r["key"]["n"])
        for r in read_records(path)
        if r["key"]["curve"] == engine.curve.curve_id and r["key"]["ineffective"] == engine.include_ineffective
    }
    count = 0
    with open(path, "ab") as fh:
        for (g, n), terms in sorted(engine.memo.items()):
            if (g, n) in have:
                continue
            rec = {"key": _key(engine, g, n), "value": enc_multidiff(MultiDifferential(n, terms, g=g))}
            blob = canonical(rec).encode("utf-8")
            fh.write(_HEADER.pack(len(blob)) + blob)
            count += 1
    return count
