"""OEIS b-file parsing, a small read-only client with a local cache, and
prefix matching of computed sequences against b-files."""

import os
import re
import tempfile
import time
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import List, Tuple

__all__ = [
    "BUNDLED",
    "BFile",
    "BFileParseError",
    "OEISError",
    "OEISNetworkError",
    "validate_id",
    "parse_bfile",
    "cache_dir",
    "fetch_bfile",
    "Match",
    "SequenceReport",
    "match_sequence",
]

BUNDLED = ("A000254", "A001710", "A003319", "A007840")
CACHE_ENV = "PATTERN_IDEALS_CACHE"
BFILE_URL = "https://oeis.org/{id}/b{digits}.txt"
MIN_INTERVAL = 1.0

_ID_RE = re.compile(r"^A\d{6}$")
_last_request = 0.0


class OEISError(Exception):
    pass


class BFileParseError(OEISError):
    pass


class OEISNetworkError(OEISError):
    pass


@dataclass(frozen=True)
class BFile:
    id: str
    entries: Tuple[Tuple[int, int], ...]

    def as_dict(self):
        return dict(self.entries)

    def __len__(self):
        return len(self.entries)


def validate_id(seq_id):
    if not isinstance(seq_id, str) or not _ID_RE.match(seq_id):
        raise ValueError(f"malformed OEIS id {seq_id!r}; expected 'A' followed by 6 digits")
    return seq_id


def parse_bfile(text, seq_id):
    """Parse ``index value`` lines; ``#`` lines and blank lines are skipped."""
    validate_id(seq_id)
    entries = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileParseError(f"{seq_id} line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileParseError(f"{seq_id} line {lineno}: non-integer field in {raw!r}") from None
        if entries and index <= entries[-1][0]:
            raise BFileParseError(f"{seq_id} line {lineno}: index {index} does not increase")
        entries.append((index, value))
    if not entries:
        raise BFileParseError(f"{seq_id}: no data lines")
    return BFile(seq_id, tuple(entries))


def cache_dir(override=None):
    if override:
        return Path(override)
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    base = os.environ.get("XDG_CACHE_HOME") or os.path.join(os.path.expanduser("~"), ".cache")
    return Path(base) / "pattern_ideals"


def _filename(seq_id):
    return f"b{seq_id[1:]}.txt"


def _bundled_text(seq_id):
    if seq_id not in BUNDLED:
        return None
    return resources.files("pattern_ideals").joinpath("data").joinpath(_filename(seq_id)).read_text("utf-8")


def _atomic_write(path, text):
    path.parent.mkdir(parents=True, exist_ok=True)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".part")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _download(seq_id, timeout):
    global _last_request
    wait = MIN_INTERVAL - (time.monotonic() - _last_request)
    if wait > 0:
        time.sleep(wait)
    url = BFILE_URL.format(id=seq_id, digits=seq_id[1:])
    req = urllib.request.Request(url, headers={"User-Agent": "pattern-ideals b-file client"})
    try:
        with urllib.request.urlopen(req, timeout=timeout) as resp:
            return resp.read().decode("utf-8")
    except (urllib.error.URLError, OSError) as exc:
        raise OEISNetworkError(f"could not fetch {url}: {exc}") from exc
    finally:
        _last_request = time.monotonic()


def fetch_bfile(seq_id, offline=False, cache=None, refresh=False, timeout=20.0):
    """Load a b-file, looking in the cache, then bundled snapshots, then OEIS.

    With ``offline`` the network is never touched.  ``refresh`` skips the
    cache and bundled copies and re-downloads.  A download is parsed before
    it replaces the cache entry, so a bad response never clobbers a good file.
    """
    validate_id(seq_id)
    path = cache_dir(cache) / _filename(seq_id)
    if not refresh or offline:
        if path.exists():
            return parse_bfile(path.read_text("utf-8"), seq_id)
        text = _bundled_text(seq_id)
        if text is not None:
            return parse_bfile(text, seq_id)
        if offline:
            raise OEISNetworkError(f"{seq_id} is not cached in {path.parent} and --offline is set")
    text = _download(seq_id, timeout)
    bfile = parse_bfile(text, seq_id)
    _atomic_write(path, text)
    return bfile


@dataclass(frozen=True)
class Match:
    id: str
    shift: int
    length: int
    full: bool


@dataclass
class SequenceReport:
    family: str
    values: List[Tuple[int, int]]
    candidates: List[Match] = field(default_factory=list)

    @property
    def full_matches(self):
        return [m for m in self.candidates if m.full]

    @property
    def candidate_ids(self):
        return [(m.id, m.length) for m in self.candidates]

    def lines(self):
        ns = [n for n, _ in self.values]
        yield f"{self.family}: n={ns[0]}..{ns[-1]} values {', '.join(str(v) for _, v in self.values)}"
        for m in self.candidates:
            status = "full prefix match" if m.full else "partial"
            yield (
                f"  {m.id}: consistent up to n = {ns[0] + m.length - 1} "
                f"({m.length}/{len(self.values)} terms, index shift {m.shift}, {status})"
                if m.length
                else f"  {m.id}: no match"
            )


def match_sequence(values, bfiles, family="", shifts=(0, 1)):
    """Longest aligned prefix of ``values`` found in each b-file.

    ``values`` is a list of ``(n, count)`` pairs or a plain list (taken as
    n = 1, 2, ...).  The computed term at ``n`` is compared with the b-file
    entry at index ``n + shift``; the best shift is reported per b-file.
    """
    if not values:
        raise ValueError("need at least one value")
    if not isinstance(values[0], tuple):
        values = list(enumerate(values, start=1))
    values = sorted(values)
    report = SequenceReport(family, values)
    for bf in bfiles:
        table = bf.as_dict()
        best = None
        for shift in shifts:
            length = 0
            for n, v in values:
                if table.get(n + shift) != v:
                    break
                length += 1
            if best is None or length > best.length:
                best = Match(bf.id, shift, length, length == len(values))
        report.candidates.append(best)
    report.candidates.sort(key=lambda m: (-m.length, m.id))
    return report
