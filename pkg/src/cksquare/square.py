"""The 3x3 square of sa/sl/sy over R, C, H and its embeddings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Tuple

from . import printed
from .analysis import AlgebraDescriptor, analyze_site
from .generators import GeneratorLabel, OmegaVector, Series, as_omega, double, graded_lambda
from .matrix import CKMatrix, embed_field
from .scalar import FieldTag, format_rational

SERIES_ORDER = (Series.sa, Series.sl, Series.sy)
FIELD_ORDER = (FieldTag.R, FieldTag.C, FieldTag.Q)


@dataclass(frozen=True)
class ExtendedSquareMetadata:
    """Printed 4x4 square. Nothing in it is computed."""

    N: int
    labels: Tuple[Tuple[str, ...], ...]
    names: Tuple[Tuple[str, ...], ...]
    computable: bool = False

    def cell(self, row: str, column: str) -> Tuple[str, str]:
        i, j = printed.ROWS.index(row), printed.COLUMNS.index(column)
        return self.labels[i][j], self.names[i][j]

    def to_json(self) -> dict:
        return {
            "N": self.N,
            "rows": list(printed.ROWS),
            "columns": list(printed.COLUMNS),
            "labels": [list(r) for r in self.labels],
            "names": [list(r) for r in self.names],
            "computable": self.computable,
        }


def extended_square(N: int) -> ExtendedSquareMetadata:
    if N not in printed.EXTENDED_LABELS:
        raise ValueError(f"the extended square exists only for N = 1, 2 (got {N})")
    names = tuple(tuple(printed.extended_name(r, c, N) for c in printed.COLUMNS)
                  for r in printed.ROWS)
    return ExtendedSquareMetadata(N, printed.EXTENDED_LABELS[N], names)


@dataclass(frozen=True)
class MagicSquare:
    N: int
    omega: OmegaVector
    grid: Tuple[Tuple[AlgebraDescriptor, ...], ...]
    extended: Optional[ExtendedSquareMetadata] = None

    def site(self, series, tag) -> AlgebraDescriptor:
        return self.grid[SERIES_ORDER.index(Series.parse(series))][FIELD_ORDER.index(FieldTag.parse(tag))]

    def dims(self) -> List[List[int]]:
        return [[d.dim for d in row] for row in self.grid]

    def reflected_pairs(self) -> List[Tuple[AlgebraDescriptor, AlgebraDescriptor]]:
        """Off-diagonal (p, q) / (q, p) descriptor pairs."""
        return [(self.grid[i][j], self.grid[j][i]) for i in range(3) for j in range(i + 1, 3)]

    def to_json(self) -> dict:
        out = {
            "N": self.N,
            "omega": [format_rational(w) for w in self.omega],
            "grid": [[d.to_json() for d in row] for row in self.grid],
        }
        if self.extended is not None:
            out["extended"] = self.extended.to_json()
        return out

    @classmethod
    def from_json(cls, data: dict) -> "MagicSquare":
        ext = data.get("extended")
        return cls(
            N=data["N"],
            omega=OmegaVector(data["omega"]),
            grid=tuple(tuple(AlgebraDescriptor.from_json(d) for d in row) for row in data["grid"]),
            extended=extended_square(ext["N"]) if ext else None,
        )


def build_square(N: int, omega, extended: bool = False) -> MagicSquare:
    omega = as_omega(omega, N)
    grid = tuple(tuple(analyze_site(s, f, N, omega).descriptor for f in FIELD_ORDER)
                 for s in SERIES_ORDER)
    return MagicSquare(N, omega, grid, extended_square(N) if extended else None)


def embed_scalar(x: CKMatrix, source: FieldTag, target: FieldTag) -> CKMatrix:
    """The same matrix read over a larger field (R < C < H)."""
    if x.tag is not source:
        raise ValueError(f"matrix is over {x.tag.name}, not {source.name}")
    if not source < target:
        raise ValueError(f"cannot embed {source.name} into {target.name}")
    return embed_field(x, target)


def embed_double(x: CKMatrix, label: GeneratorLabel) -> CKMatrix:
    """Send an sa/sl generator into the sy series.

    Hermitian-type generators (M, H, J^alpha) take the lambda = 2 block form
    and antihermitian ones (J, M^alpha, H^alpha, E^alpha) double diagonally.
    """
    if label.lam is not None:
        raise ValueError(f"{label} is already an sy generator")
    return double(x, graded_lambda(label))


# ---- rendering ---------------------------------------------------------------

def _cells(square: MagicSquare) -> List[List[List[str]]]:
    rows = []
    for row in square.grid:
        cells = []
        for d in row:
            cells.append([d.cartan_label, d.standard_name, f"dim {d.dim}  sig {d.signature}"])
        rows.append(cells)
    return rows


def render_table(square: MagicSquare) -> str:
    cells = _cells(square)
    width = max(len(line) for row in cells for cell in row for line in cell)
    head_w = 4
    omega = ",".join(format_rational(w) for w in square.omega)
    lines = [f"N = {square.N}   omega = ({omega})", ""]
    lines.append((" " * head_w + " | ".join(f.symbol.center(width) for f in FIELD_ORDER)).rstrip())
    rule = "-" * (head_w + 3 * width + 6)
    lines.append(rule)
    for s, row in zip(SERIES_ORDER, cells):
        for k in range(3):
            head = s.name if k == 0 else ""
            lines.append(head.ljust(head_w) + " | ".join(cell[k].ljust(width) for cell in row).rstrip())
        lines.append(rule)
    if square.extended is not None:
        ext = square.extended
        lines.append("")
        lines.append(f"Printed extended square, N = {ext.N} (labels only, not computed)")
        ew = max(len(x) for r in ext.labels + ext.names for x in r)
        lines.append((" " * head_w + " | ".join(printed.FIELD_SYMBOLS[c].center(ew)
                                                  for c in printed.COLUMNS)).rstrip())
        for r, labels, names in zip(printed.ROWS, ext.labels, ext.names):
            lines.append(r.ljust(head_w) + " | ".join(x.ljust(ew) for x in labels).rstrip())
            lines.append((" " * head_w + " | ".join(x.ljust(ew) for x in names)).rstrip())
    return "\n".join(lines) + "\n"


def render_json(square: MagicSquare) -> str:
    return json.dumps(square.to_json(), indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def emit(square: MagicSquare, fmt: str = "table") -> str:
    if fmt == "table":
        return render_table(square)
    if fmt == "json":
        return render_json(square)
    raise ValueError(f"unknown format {fmt!r}")


def parse_square(text: str) -> MagicSquare:
    return MagicSquare.from_json(json.loads(text))
