"""Text interchange formats for labelings.

Native document::

    m=5
    n=5
    surface=projective
    S=53
    generator=hbbl:5,5

    1 25 2 24 3
    ...

Rows follow the file order: ``ascending`` lists row j = 1 first (default),
``descending`` lists row j = n first.  CSV is n lines of m integers, no header.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Literal

from facemagic.grid import Dims
from facemagic.labeling import Labeling, LabelingError

Order = Literal["ascending", "descending"]
KNOWN_KEYS = ("m", "n", "surface", "S", "generator", "sequence")


class DocumentError(ValueError):
    """Malformed document; the message carries line and field context."""


@dataclass
class LabelingDocument:
    labeling: Labeling
    metadata: dict[str, str] = field(default_factory=dict)

    @property
    def dims(self) -> Dims:
        return self.labeling.dims


def _ordered_rows(L: Labeling, order: Order) -> list[tuple[int, ...]]:
    rows = L.rows()
    return rows[::-1] if order == "descending" else rows


def dumps(doc: LabelingDocument, order: Order = "ascending") -> str:
    L = doc.labeling
    lines = [f"m={L.dims.m}", f"n={L.dims.n}", "surface=projective"]
    for key in ("S", "generator", "sequence"):
        if key in doc.metadata:
            lines.append(f"{key}={doc.metadata[key]}")
    lines.append("")
    lines.extend(" ".join(map(str, row)) for row in _ordered_rows(L, order))
    return "\n".join(lines) + "\n"


def loads(text: str, order: Order = "ascending", source: str = "<document>") -> LabelingDocument:
    lines = text.splitlines()
    header: dict[str, str] = {}
    k = 0
    while k < len(lines) and lines[k].strip():
        line = lines[k].strip()
        if "=" not in line:
            raise DocumentError(f"{source}:{k + 1}: expected key=value header, got {line!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        if key in header:
            raise DocumentError(f"{source}:{k + 1}: duplicate header field {key!r}")
        header[key] = value
        k += 1
    for key in ("m", "n", "surface"):
        if key not in header:
            raise DocumentError(f"{source}: missing header field {key!r}")
    if header["surface"] != "projective":
        raise DocumentError(f"{source}: field 'surface' must be 'projective', got {header['surface']!r}")
    try:
        m, n = int(header["m"]), int(header["n"])
        dims = Dims(m, n)
    except (ValueError, TypeError) as exc:
        raise DocumentError(f"{source}: bad field 'm'/'n': {exc}") from None

    body = [(no + 1, ln) for no, ln in enumerate(lines) if no > k and ln.strip()]
    if len(body) != n:
        raise DocumentError(f"{source}: expected {n} label rows, found {len(body)}")
    rows = []
    for no, ln in body:
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise DocumentError(f"{source}:{no}: non-integer label in {ln.strip()!r}") from None
        if len(row) != m:
            raise DocumentError(f"{source}:{no}: expected {m} labels, got {len(row)}")
        rows.append(row)
    if order == "descending":
        rows.reverse()
    try:
        L = Labeling(dims, tuple(x for r in rows for x in r))
    except LabelingError as exc:
        raise LabelingError(f"{source}: {exc}") from None
    meta = {key: v for key, v in header.items() if key not in ("m", "n", "surface")}
    if "S" in meta:
        try:
            int(meta["S"])
        except ValueError:
            raise DocumentError(f"{source}: field 'S' must be an integer, got {meta['S']!r}") from None
    return LabelingDocument(L, meta)


def load(path: str | Path, order: Order = "ascending") -> LabelingDocument:
    return loads(Path(path).read_text(), order, source=str(path))


def dump(doc: LabelingDocument, path: str | Path, order: Order = "ascending") -> None:
    Path(path).write_text(dumps(doc, order))


def to_csv(L: Labeling, order: Order = "ascending") -> str:
    return "\n".join(",".join(map(str, row)) for row in _ordered_rows(L, order)) + "\n"


def from_csv(text: str, order: Order = "ascending") -> Labeling:
    rows = []
    for no, ln in enumerate(text.splitlines(), start=1):
        if not ln.strip():
            continue
        try:
            rows.append([int(tok) for tok in ln.split(",")])
        except ValueError:
            raise DocumentError(f"csv:{no}: non-integer field in {ln!r}") from None
    if not rows:
        raise DocumentError("csv: no rows")
    if any(len(r) != len(rows[0]) for r in rows):
        raise DocumentError("csv: ragged rows")
    return Labeling.from_rows(rows, top_down=(order == "descending"))


def render_ascii(L: Labeling, table: bool = False) -> str:
    """Rows from j = n at the top down to j = 1, as the figures and tables print them."""
    w = len(str(L.dims.size))
    rows = L.rows()[::-1]
    if not table:
        return "\n".join(" ".join(f"{x:>{w}}" for x in r) for r in rows) + "\n"
    rule = "+" + "+".join("-" * (w + 2) for _ in range(L.dims.m)) + "+"
    out = [rule]
    for r in rows:
        out.append("|" + "|".join(f" {x:>{w}} " for x in r) + "|")
        out.append(rule)
    return "\n".join(out) + "\n"
