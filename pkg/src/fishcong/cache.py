"""On-disk cache for integer sequences.

One file per generator key; a header line with metadata and checksum, then
one decimal value per line.  Writes are atomic (temp file + rename) and a
rewrite must extend the cached prefix, never contradict it.
"""

from __future__ import annotations

import hashlib
import os
import tempfile
from pathlib import Path

SCHEMA = "fishcong-seq/1"


class CacheMismatchError(RuntimeError):
    """A recomputation contradicted a previously cached prefix."""


def default_cache_dir() -> Path:
    env = os.environ.get("FISHCONG_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".fishcong"


def _path(cache_dir, key: str) -> Path:
    return Path(cache_dir) / f"{key}.seq"


def _checksum(values) -> str:
    payload = "\n".join(str(v) for v in values).encode()
    return hashlib.sha256(payload).hexdigest()


def load(cache_dir, key: str):
    """Cached values for the key, or None if absent or unreadable."""
    path = _path(cache_dir, key)
    try:
        lines = path.read_text().splitlines()
    except OSError:
        return None
    if not lines:
        return None
    header = lines[0].split()
    if len(header) < 4 or header[0] != SCHEMA:
        return None
    try:
        count = int(header[2])
        values = [int(v) for v in lines[1:]]
    except ValueError:
        return None
    if len(values) != count or _checksum(values) != header[3]:
        return None
    return values


def store(cache_dir, key: str, values):
    """Write values for the key; verifies prefix coherence with any
    existing entry before replacing it."""
    values = [int(v) for v in values]
    old = load(cache_dir, key)
    if old is not None:
        n = min(len(old), len(values))
        if old[:n] != values[:n]:
            raise CacheMismatchError(
                f"cache entry {key!r} disagrees with newly computed values")
        if len(old) >= len(values):
            return  # nothing new
    path = _path(cache_dir, key)
    path.parent.mkdir(parents=True, exist_ok=True)
    body = "\n".join([f"{SCHEMA} {key} {len(values)} {_checksum(values)}"]
                     + [str(v) for v in values]) + "\n"
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=".tmp-", suffix=".seq")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(body)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def get_sequence(cache_dir, key: str, count: int, compute):
    """First ``count`` values for the key, computing (and caching) on miss.

    ``compute`` receives the required length and returns the sequence.
    """
    cached = load(cache_dir, key)
    if cached is not None and len(cached) >= count:
        return cached[:count]
    values = list(compute(count))
    store(cache_dir, key, values)
    return values[:count]
