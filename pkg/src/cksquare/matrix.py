"""Dense square matrices over R, C or H.

Scalars multiply from the left: ``scale_left(u, A)[r][c] == u * A[r][c]``.
Over H that is the only convention used anywhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Sequence, Tuple

from .scalar import FieldTag, KElement, TagMismatch, k_conj, k_embed, k_mul, rational

_ZERO = Fraction(0)


class CKMatrix:
    """Square matrix with entries in a single division algebra."""

    __slots__ = ("order", "tag", "entries", "_nz")

    def __init__(self, tag: FieldTag, entries: Sequence[Sequence[KElement]]):
        n = len(entries)
        if n == 0:
            raise ValueError("matrix order must be positive")
        rows = []
        for row in entries:
            if len(row) != n:
                raise ValueError("matrix must be square")
            for e in row:
                if e.tag is not tag:
                    raise TagMismatch(f"entry over {e.tag.name} in a {tag.name} matrix")
            rows.append(tuple(row))
        self.order = n
        self.tag = tag
        self.entries = tuple(rows)
        self._nz = None

    @classmethod
    def zeros(cls, order: int, tag: FieldTag) -> "CKMatrix":
        z = KElement.zero(tag)
        return cls(tag, [[z] * order for _ in range(order)])

    @classmethod
    def identity(cls, order: int, tag: FieldTag) -> "CKMatrix":
        return cls.from_sparse(order, tag, {(i, i): KElement.one(tag) for i in range(order)})

    @classmethod
    def from_sparse(cls, order: int, tag: FieldTag,
                    items: Mapping[Tuple[int, int], KElement]) -> "CKMatrix":
        z = KElement.zero(tag)
        rows = [[z] * order for _ in range(order)]
        for (r, c), e in items.items():
            rows[r][c] = e
        return cls(tag, rows)

    @classmethod
    def from_rationals(cls, rows: Sequence[Sequence], tag: FieldTag = FieldTag.R) -> "CKMatrix":
        """Build from a grid of real rationals, embedded into ``tag``."""
        return cls(tag, [[KElement(tag, (x,)) for x in row] for row in rows])

    def nonzero(self) -> List[List[Tuple[int, KElement]]]:
        """Per-row lists of ``(column, entry)`` for the non-zero entries."""
        if self._nz is None:
            self._nz = [[(c, e) for c, e in enumerate(row) if e] for row in self.entries]
        return self._nz

    def __getitem__(self, rc: Tuple[int, int]) -> KElement:
        r, c = rc
        return self.entries[r][c]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, CKMatrix):
            return NotImplemented
        return self.tag is other.tag and self.entries == other.entries

    def __hash__(self) -> int:
        return hash((self.tag, self.entries))

    def __repr__(self) -> str:
        return f"CKMatrix({self.tag.name}, order={self.order})"

    def __str__(self) -> str:
        cells = [[str(e) for e in row] for row in self.entries]
        width = max(len(s) for row in cells for s in row)
        return "\n".join("[ " + "  ".join(s.rjust(width) for s in row) + " ]" for row in cells)

    def is_zero(self) -> bool:
        return not any(self.nonzero())

    def __add__(self, other: "CKMatrix") -> "CKMatrix":
        _check(self, other)
        return CKMatrix(self.tag, [[a + b for a, b in zip(ra, rb)]
                                   for ra, rb in zip(self.entries, other.entries)])

    def __sub__(self, other: "CKMatrix") -> "CKMatrix":
        _check(self, other)
        return CKMatrix(self.tag, [[a - b for a, b in zip(ra, rb)]
                                   for ra, rb in zip(self.entries, other.entries)])

    def __neg__(self) -> "CKMatrix":
        return CKMatrix(self.tag, [[-a for a in row] for row in self.entries])

    def __matmul__(self, other: "CKMatrix") -> "CKMatrix":
        return mat_mul(self, other)

    def scale(self, q) -> "CKMatrix":
        """Multiply by a real rational."""
        q = rational(q)
        return CKMatrix(self.tag, [[a.scale(q) for a in row] for row in self.entries])


def _check(a: CKMatrix, b: CKMatrix) -> None:
    if a.tag is not b.tag:
        raise TagMismatch(f"cannot combine {a.tag.name} and {b.tag.name} matrices")
    if a.order != b.order:
        raise ValueError(f"order mismatch: {a.order} vs {b.order}")


def _product_items(a: CKMatrix, b: CKMatrix) -> Dict[Tuple[int, int], KElement]:
    out: Dict[Tuple[int, int], KElement] = {}
    bnz = b.nonzero()
    for i, arow in enumerate(a.nonzero()):
        for k, x in arow:
            for j, y in bnz[k]:
                p = k_mul(x, y)
                key = (i, j)
                prev = out.get(key)
                out[key] = p if prev is None else prev + p
    return out


def mat_mul(a: CKMatrix, b: CKMatrix) -> CKMatrix:
    _check(a, b)
    return CKMatrix.from_sparse(a.order, a.tag, _product_items(a, b))


def commutator(a: CKMatrix, b: CKMatrix) -> CKMatrix:
    """The Lie bracket ``AB - BA``."""
    _check(a, b)
    ab = _product_items(a, b)
    for key, e in _product_items(b, a).items():
        prev = ab.get(key)
        ab[key] = -e if prev is None else prev - e
    return CKMatrix.from_sparse(a.order, a.tag, ab)


def scale_left(u: KElement, a: CKMatrix) -> CKMatrix:
    """Left scalar multiple ``u * A`` (entrywise ``u * A[r][c]``)."""
    if u.tag is not a.tag:
        raise TagMismatch(f"scalar over {u.tag.name}, matrix over {a.tag.name}")
    return CKMatrix(a.tag, [[k_mul(u, e) for e in row] for row in a.entries])


def conj_transpose(a: CKMatrix) -> CKMatrix:
    n = a.order
    return CKMatrix(a.tag, [[k_conj(a.entries[c][r]) for c in range(n)] for r in range(n)])


def transpose(a: CKMatrix) -> CKMatrix:
    n = a.order
    return CKMatrix(a.tag, [[a.entries[c][r] for c in range(n)] for r in range(n)])


def trace(a: CKMatrix) -> KElement:
    total = KElement.zero(a.tag)
    for i in range(a.order):
        total = total + a.entries[i][i]
    return total


def re_trace(a: CKMatrix) -> Fraction:
    return sum((a.entries[i][i].c[0] for i in range(a.order)), _ZERO)


def flatten(a: CKMatrix) -> Tuple[Fraction, ...]:
    """Rational coordinates, row-major over entries, then unit index."""
    d = a.tag.dim
    return tuple(q for row in a.entries for e in row for q in e.c[:d])


def flatten_sparse(a: CKMatrix) -> Dict[int, Fraction]:
    """The non-zero part of :func:`flatten` as ``{index: value}``."""
    d = a.tag.dim
    n = a.order
    out = {}
    for r, row in enumerate(a.nonzero()):
        for c, e in row:
            base = (r * n + c) * d
            for u in range(d):
                q = e.c[u]
                if q:
                    out[base + u] = q
    return out


def unflatten(vec: Sequence, order: int, tag: FieldTag) -> CKMatrix:
    d = tag.dim
    if len(vec) != order * order * d:
        raise ValueError(f"vector length {len(vec)} does not match order {order} over {tag.name}")
    rows = []
    for r in range(order):
        row = []
        for c in range(order):
            base = (r * order + c) * d
            row.append(KElement(tag, vec[base:base + d]))
        rows.append(row)
    return CKMatrix(tag, rows)


def ambient_dim(order: int, tag: FieldTag) -> int:
    return order * order * tag.dim


# Real blocks of left multiplication by each unit, acting on coordinate columns.
def _left_block(e: KElement) -> List[List[Fraction]]:
    d = e.tag.dim
    cols = []
    for u in range(d):
        prod = k_mul(e, KElement.unit(e.tag, u))
        cols.append(prod.c[:d])
    return [[cols[c][r] for c in range(d)] for r in range(d)]


def realify(a: CKMatrix) -> CKMatrix:
    """Replace each entry by its real 1x1, 2x2 or 4x4 left-multiplication block."""
    d = a.tag.dim
    n = a.order * d
    grid = [[_ZERO] * n for _ in range(n)]
    for r, row in enumerate(a.entries):
        for c, e in enumerate(row):
            if not e:
                continue
            block = _left_block(e)
            for i in range(d):
                for j in range(d):
                    grid[r * d + i][c * d + j] = block[i][j]
    return CKMatrix.from_rationals(grid)


def embed_field(a: CKMatrix, tag: FieldTag) -> CKMatrix:
    """Same entries, reinterpreted over a larger field."""
    return CKMatrix(tag, [[k_embed(e, tag) for e in row] for row in a.entries])


def block(blocks: Sequence[Sequence[CKMatrix]]) -> CKMatrix:
    """Assemble a square block matrix from equally sized square blocks."""
    k = len(blocks)
    n = blocks[0][0].order
    tag = blocks[0][0].tag
    rows = []
    for bi in range(k):
        for r in range(n):
            row = []
            for bj in range(k):
                m = blocks[bi][bj]
                if m.order != n or m.tag is not tag:
                    raise ValueError("blocks must share order and field")
                row.extend(m.entries[r])
            rows.append(row)
    return CKMatrix(tag, rows)


def to_json(a: CKMatrix) -> dict:
    return {
        "order": a.order,
        "field": a.tag.name,
        "entries": [[e.to_strings() for e in row] for row in a.entries],
    }


def from_json(data: Mapping) -> CKMatrix:
    tag = FieldTag.parse(data["field"])
    m = CKMatrix(tag, [[KElement.from_strings(tag, e) for e in row] for row in data["entries"]])
    if m.order != data["order"]:
        raise ValueError("declared order does not match entries")
    return m


def linear_combination(coeffs: Iterable[Tuple[Fraction, CKMatrix]], order: int,
                       tag: FieldTag) -> CKMatrix:
    acc: Dict[Tuple[int, int], KElement] = {}
    for q, m in coeffs:
        if not q:
            continue
        for r, row in enumerate(m.nonzero()):
            for c, e in row:
                t = e.scale(q)
                prev = acc.get((r, c))
                acc[(r, c)] = t if prev is None else prev + t
    return CKMatrix.from_sparse(order, tag, acc)
