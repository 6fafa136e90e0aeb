"""Triangle serialization formats and the on-disk row cache.

Coefficients travel as decimal strings everywhere: c(n, n, 0, 4) = 4^n
clears 64 bits by n = 32, and JSON consumers in other languages would
silently round native numbers long before that.

Formats:
  json   - versioned structured document, the canonical round-trip form
  csv    - one triangle row per line, n first, after a comment line
           carrying (m, p) and the generator version
  bfile  - OEIS b-file: "index value" pairs, 1-based contiguous index,
           row-major over the triangle, no header
"""

from __future__ import annotations

import json
import os
import threading
from dataclasses import dataclass

from . import __version__
from .errors import InvalidConfigError
from .polyfamily import Family, triangle

SCHEMA_VERSION = 1

_TRIANGLE_REFS = {(2, 2): "A136388", (3, 2): "A136389", (4, 2): "A136390",
                  (5, 2): "A136397", (6, 2): "A136398"}
_COEFF_SEQ_REFS = ("A024623", "A049611", "A055585", "A001844", "A035597")


def oeis_refs(family: Family) -> list[str]:
    refs = []
    key = (family.m, family.p)
    if key in _TRIANGLE_REFS:
        refs.append(_TRIANGLE_REFS[key])
    if key == (2, 2):
        refs.extend(_COEFF_SEQ_REFS)
    return refs


@dataclass(frozen=True)
class TriangleDocument:
    m: int
    p: int
    rows: tuple[tuple[int, tuple[str, ...]], ...]  # (n, decimal coeff strings)
    oeis: tuple[str, ...]
    generator: str

    @property
    def family(self) -> Family:
        return Family(self.m, self.p)

    def row_ints(self, n: int) -> list[int]:
        for rn, coeffs in self.rows:
            if rn == n:
                return [int(c) for c in coeffs]
        raise KeyError(n)


def build_document(family: Family, max_n: int) -> TriangleDocument:
    if max_n < family.m:
        raise InvalidConfigError(
            f"max_n={max_n} precedes the first row n={family.m}")
    tri = triangle(family)
    rows = tuple((n, tuple(str(c) for c in tri.row(n)))
                 for n in range(family.m, max_n + 1))
    return TriangleDocument(family.m, family.p, rows, tuple(oeis_refs(family)),
                            f"blockcheb {__version__}")


def to_json(doc: TriangleDocument) -> str:
    payload = {
        "schemaVersion": SCHEMA_VERSION,
        "kind": "triangle",
        "m": doc.m,
        "p": doc.p,
        "rows": [{"n": n, "coeffs": list(coeffs)} for n, coeffs in doc.rows],
        "metadata": {"oeisRefs": list(doc.oeis), "generator": doc.generator},
    }
    return json.dumps(payload, indent=2) + "\n"


def from_json(text: str) -> TriangleDocument:
    payload = json.loads(text)
    if payload.get("schemaVersion") != SCHEMA_VERSION:
        raise InvalidConfigError(
            f"unsupported schemaVersion {payload.get('schemaVersion')!r}")
    rows = tuple((r["n"], tuple(r["coeffs"])) for r in payload["rows"])
    meta = payload.get("metadata", {})
    return TriangleDocument(payload["m"], payload["p"], rows,
                            tuple(meta.get("oeisRefs", ())),
                            meta.get("generator", ""))


def to_csv(doc: TriangleDocument) -> str:
    lines = [f"# blockcheb triangle m={doc.m} p={doc.p} generator={doc.generator}"]
    for n, coeffs in doc.rows:
        lines.append(",".join([str(n), *coeffs]))
    return "\n".join(lines) + "\n"


def from_csv(text: str) -> TriangleDocument:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("# blockcheb triangle"):
        raise InvalidConfigError("missing triangle csv header comment")
    header = lines[0][2:]
    m = int(header.split("m=", 1)[1].split()[0])
    p = int(header.split("p=", 1)[1].split()[0])
    gen = header.split("generator=", 1)[1] if "generator=" in header else ""
    rows = []
    for ln in lines[1:]:
        cells = ln.split(",")
        rows.append((int(cells[0]), tuple(cells[1:])))
    return TriangleDocument(m, p, tuple(rows),
                            tuple(oeis_refs(Family(m, p))), gen)


def to_bfile(doc: TriangleDocument) -> str:
    lines = []
    index = 1
    for _, coeffs in doc.rows:
        for c in coeffs:
            lines.append(f"{index} {c}")
            index += 1
    return "\n".join(lines) + "\n" if lines else ""


def from_bfile(text: str, m: int, p: int) -> TriangleDocument:
    """Rebuild a document from b-file lines.

    The flat sequence alone does not carry (m, p); the row boundaries
    follow from m since row n holds n + 1 coefficients.
    """
    values = []
    for ln in text.splitlines():
        ln = ln.strip()
        if not ln:
            continue
        idx, val = ln.split()
        if int(idx) != len(values) + 1:
            raise InvalidConfigError(f"b-file index gap at line {ln!r}")
        values.append(val)
    rows = []
    n, pos = m, 0
    while pos < len(values):
        if pos + n + 1 > len(values):
            raise InvalidConfigError("b-file ends mid-row")
        rows.append((n, tuple(values[pos:pos + n + 1])))
        pos += n + 1
        n += 1
    return TriangleDocument(m, p, tuple(rows), tuple(oeis_refs(Family(m, p))),
                            f"blockcheb {__version__}")


FORMATS = {"json": to_json, "csv": to_csv, "bfile": to_bfile}


def serialize(doc: TriangleDocument, fmt: str) -> str:
    if fmt not in FORMATS:
        raise InvalidConfigError(f"unknown format {fmt!r}")
    return FORMATS[fmt](doc)


_cache_locks: dict[str, threading.Lock] = {}
_cache_locks_guard = threading.Lock()


def _lock_for(path: str) -> threading.Lock:
    with _cache_locks_guard:
        return _cache_locks.setdefault(path, threading.Lock())


class TriangleCache:
    """One JSON file per (m, p) triangle under a cache directory.

    Rows only ever accumulate; a stored file whose generator version
    differs from the running tool is discarded wholesale rather than
    migrated.  Writes go through an adjacent temp file and os.replace so
    a crash never leaves a torn cache.
    """

    def __init__(self, directory: str):
        self.directory = directory
        os.makedirs(directory, exist_ok=True)

    def _path(self, family: Family) -> str:
        return os.path.join(self.directory,
                            f"triangle_m{family.m}_p{family.p}.json")

    def load(self, family: Family) -> TriangleDocument | None:
        path = self._path(family)
        try:
            with open(path, encoding="utf-8") as fh:
                doc = from_json(fh.read())
        except FileNotFoundError:
            return None
        except (InvalidConfigError, json.JSONDecodeError, KeyError):
            return None
        if doc.generator != f"blockcheb {__version__}":
            return None
        if (doc.m, doc.p) != (family.m, family.p):
            return None
        return doc

    def document(self, family: Family, max_n: int) -> TriangleDocument:
        path = self._path(family)
        with _lock_for(path):
            stored = self.load(family)
            have = stored.rows[-1][0] if stored and stored.rows else family.m - 1
            if stored and have >= max_n:
                return TriangleDocument(stored.m, stored.p,
                                        stored.rows[:max_n - family.m + 1],
                                        stored.oeis, stored.generator)
            fresh = build_document(family, max_n)
            if stored:
                merged = stored.rows + fresh.rows[have - family.m + 1:]
                fresh = TriangleDocument(fresh.m, fresh.p, merged, fresh.oeis,
                                         fresh.generator)
            tmp = path + ".tmp"
            with open(tmp, "w", encoding="utf-8") as fh:
                fh.write(to_json(fresh))
            os.replace(tmp, path)
            return fresh
