"""Exact rational spans, Lie closure and structure constants.

Vectors are handled sparsely as ``{index: Fraction}``. A span is kept in
fully reduced row-echelon form with unit pivots, which makes it canonical:
two spans are equal exactly when their row sets are equal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .matrix import (CKMatrix, ambient_dim, commutator, flatten_sparse,
                     linear_combination)
from .scalar import format_rational

SparseVec = Dict[int, Fraction]


class ClosureBoundExceeded(RuntimeError):
    """The Lie closure grew past its allowed dimension."""


class NotClosed(ValueError):
    """A bracket left the span of the basis."""


class LinearDependence(ValueError):
    """A supposed basis is linearly dependent."""


def _sparse(v) -> SparseVec:
    if isinstance(v, Mapping):
        return {i: Fraction(q) for i, q in v.items() if q}
    return {i: Fraction(q) for i, q in enumerate(v) if q}


class RationalSpan:
    """Row space of rational vectors in reduced echelon form.

    Each row also remembers how it was obtained from the accepted input
    vectors, so coordinates with respect to those inputs are available.
    """

    def __init__(self, ambient: int):
        self.ambient = ambient
        self.rows: Dict[int, SparseVec] = {}
        self._combo: Dict[int, SparseVec] = {}

    @property
    def rank(self) -> int:
        return len(self.rows)

    def __len__(self) -> int:
        return len(self.rows)

    def copy(self) -> "RationalSpan":
        s = RationalSpan(self.ambient)
        s.rows = {p: dict(r) for p, r in self.rows.items()}
        s._combo = {p: dict(c) for p, c in self._combo.items()}
        return s

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalSpan):
            return NotImplemented
        return self.ambient == other.ambient and self.rows == other.rows

    def pivots(self) -> List[int]:
        return sorted(self.rows)

    def echelon(self) -> List[Tuple[Fraction, ...]]:
        """Dense rows sorted by pivot column."""
        out = []
        for p in self.pivots():
            r = self.rows[p]
            out.append(tuple(r.get(i, Fraction(0)) for i in range(self.ambient)))
        return out

    def _check_dim(self, v: SparseVec) -> None:
        if v and (max(v) >= self.ambient or min(v) < 0):
            raise ValueError(f"vector does not live in ambient dimension {self.ambient}")

    def _reduce(self, v: SparseVec, track: bool) -> Tuple[SparseVec, SparseVec]:
        res = dict(v)
        combo: SparseVec = {}
        rows = self.rows
        for p in [p for p in v if p in rows]:
            c = v[p]
            for i, q in rows[p].items():
                t = res.get(i, 0) - c * q
                if t:
                    res[i] = t
                else:
                    res.pop(i, None)
            if track:
                for i, q in self._combo[p].items():
                    t = combo.get(i, 0) + c * q
                    if t:
                        combo[i] = t
                    else:
                        combo.pop(i, None)
        return res, combo

    def contains(self, v) -> bool:
        v = _sparse(v)
        self._check_dim(v)
        return not self._reduce(v, False)[0]

    def coordinates(self, v) -> Optional[SparseVec]:
        """Coefficients of ``v`` on the accepted inputs, or None if outside."""
        v = _sparse(v)
        self._check_dim(v)
        res, combo = self._reduce(v, True)
        return None if res else combo

    def insert(self, v) -> bool:
        """Add ``v`` in place; returns whether the span grew."""
        v = _sparse(v)
        self._check_dim(v)
        res, combo = self._reduce(v, True)
        if not res:
            return False
        idx = len(self.rows)
        combo = {i: -q for i, q in combo.items()}
        combo[idx] = Fraction(1)
        p = min(res)
        inv = 1 / res[p]
        row = {i: q * inv for i, q in res.items()}
        combo = {i: q * inv for i, q in combo.items()}
        for op, other in self.rows.items():
            c = other.get(p)
            if not c:
                continue
            for i, q in row.items():
                t = other.get(i, 0) - c * q
                if t:
                    other[i] = t
                else:
                    del other[i]
            oc = self._combo[op]
            for i, q in combo.items():
                t = oc.get(i, 0) - c * q
                if t:
                    oc[i] = t
                else:
                    oc.pop(i, None)
        self.rows[p] = row
        self._combo[p] = combo
        return True


def span_insert(span: RationalSpan, v) -> Tuple[RationalSpan, bool]:
    """Non-mutating insert."""
    s = span.copy()
    return s, s.insert(v)


def span_of(vectors: Iterable, ambient: int) -> RationalSpan:
    s = RationalSpan(ambient)
    for v in vectors:
        s.insert(v)
    return s


@dataclass
class LieBasis:
    """Linearly independent matrices together with the span they generate."""

    matrices: List[CKMatrix]
    span: RationalSpan
    labels: Optional[List[object]] = None

    @property
    def dim(self) -> int:
        return len(self.matrices)

    def __len__(self) -> int:
        return len(self.matrices)

    @property
    def order(self) -> Optional[int]:
        return self.matrices[0].order if self.matrices else None

    def label(self, i: int) -> str:
        if self.labels is not None and i < len(self.labels) and self.labels[i] is not None:
            return str(self.labels[i])
        return f"X{i + 1}"

    def coordinates(self, m: CKMatrix) -> Optional[List[Fraction]]:
        c = self.span.coordinates(flatten_sparse(m))
        if c is None:
            return None
        return [c.get(i, Fraction(0)) for i in range(self.dim)]

    def contains(self, m: CKMatrix) -> bool:
        return self.span.contains(flatten_sparse(m))

    @classmethod
    def from_matrices(cls, matrices: Sequence[CKMatrix], labels: Optional[Sequence] = None,
                      strict: bool = True) -> "LieBasis":
        """Independent basis from ``matrices``.

        With ``strict`` a dependent input raises :class:`LinearDependence`;
        otherwise dependent members are dropped.
        """
        if not matrices:
            return cls([], RationalSpan(0), [] if labels is not None else None)
        m0 = matrices[0]
        span = RationalSpan(ambient_dim(m0.order, m0.tag))
        kept, kept_labels = [], []
        for i, m in enumerate(matrices):
            if m.order != m0.order or m.tag is not m0.tag:
                raise ValueError("all matrices must share order and field")
            if span.insert(flatten_sparse(m)):
                kept.append(m)
                kept_labels.append(labels[i] if labels is not None else None)
            elif strict:
                name = labels[i] if labels is not None else f"#{i}"
                raise LinearDependence(f"matrix {name} is in the span of the preceding ones")
        return cls(kept, span, kept_labels if labels is not None else None)


def lie_closure(gens: Sequence[CKMatrix], max_dim: Optional[int] = None,
                labels: Optional[Sequence] = None) -> LieBasis:
    """Smallest Lie algebra containing ``gens``.

    The independent generators come first, then new brackets in discovery
    order. Each basis element is bracketed with every earlier one exactly
    once, which processes pairs in FIFO order.
    """
    if not gens:
        return LieBasis([], RationalSpan(0), [] if labels is not None else None)
    basis = LieBasis.from_matrices(gens, labels, strict=False)
    if max_dim is None:
        max_dim = basis.span.ambient
    if basis.dim > max_dim:
        raise ClosureBoundExceeded(f"generators already span {basis.dim} > {max_dim}")
    mats = basis.matrices
    labs = basis.labels
    i = 0
    while i < len(mats):
        xi = mats[i]
        for j in range(i):
            br = commutator(mats[j], xi)
            if br.is_zero():
                continue
            if basis.span.insert(flatten_sparse(br)):
                mats.append(br)
                if labs is not None:
                    labs.append(f"[{_name(labs, j)},{_name(labs, i)}]")
                if len(mats) > max_dim:
                    raise ClosureBoundExceeded(f"closure exceeded dimension bound {max_dim}")
        i += 1
    return basis


def _name(labs, i):
    return labs[i] if labs[i] is not None else f"X{i + 1}"


def is_closed(basis: LieBasis) -> bool:
    m = basis.matrices
    return all(basis.contains(commutator(m[i], m[j]))
               for i in range(len(m)) for j in range(i + 1, len(m)))


def is_subspace(a: LieBasis, b: LieBasis) -> bool:
    if a.dim == 0:
        return True
    if b.dim == 0:
        return False
    if a.span.ambient != b.span.ambient:
        raise ValueError("ambient dimensions differ")
    return all(b.contains(m) for m in a.matrices)


def same_span(a: LieBasis, b: LieBasis) -> bool:
    return a.dim == b.dim and is_subspace(a, b)


@dataclass
class StructureConstants:
    """c[i, j][k] with [X_i, X_j] = sum_k c_ij^k X_k, stored for i < j (0-based)."""

    dim: int
    data: Dict[Tuple[int, int], Dict[int, Fraction]] = field(default_factory=dict)
    labels: Optional[List[str]] = None

    def bracket(self, i: int, j: int) -> Dict[int, Fraction]:
        if i == j:
            return {}
        if i < j:
            return self.data.get((i, j), {})
        return {k: -q for k, q in self.data.get((j, i), {}).items()}

    def get(self, i: int, j: int, k: int) -> Fraction:
        return self.bracket(i, j).get(k, Fraction(0))

    def ad(self, i: int) -> Dict[Tuple[int, int], Fraction]:
        """Sparse matrix of ad X_i: entry (k, j) is c_ij^k."""
        out = {}
        for j in range(self.dim):
            for k, q in self.bracket(i, j).items():
                out[(k, j)] = q
        return out

    def records(self) -> List[dict]:
        """Export as 1-based ``{i, j, k, value}`` records sorted by (i, j, k)."""
        out = []
        for (i, j) in sorted(self.data):
            for k in sorted(self.data[(i, j)]):
                out.append({"i": i + 1, "j": j + 1, "k": k + 1,
                            "value": format_rational(self.data[(i, j)][k])})
        return out

    def to_json(self) -> dict:
        return {"dim": self.dim, "labels": self.labels, "constants": self.records()}

    @classmethod
    def from_json(cls, payload: Mapping) -> "StructureConstants":
        sc = cls(payload["dim"], labels=payload.get("labels"))
        for rec in payload["constants"]:
            key = (rec["i"] - 1, rec["j"] - 1)
            sc.data.setdefault(key, {})[rec["k"] - 1] = Fraction(rec["value"])
        return sc


def structure_constants(basis: LieBasis) -> StructureConstants:
    m = basis.matrices
    n = len(m)
    sc = StructureConstants(n, labels=[basis.label(i) for i in range(n)])
    for i in range(n):
        for j in range(i + 1, n):
            br = commutator(m[i], m[j])
            if br.is_zero():
                continue
            c = basis.span.coordinates(flatten_sparse(br))
            if c is None:
                raise NotClosed(f"[{basis.label(i)}, {basis.label(j)}] is outside the span")
            if c:
                sc.data[(i, j)] = c
    return sc


def reconstruct(sc: StructureConstants, basis: LieBasis, i: int, j: int) -> CKMatrix:
    """Rebuild [X_i, X_j] from the constants."""
    m0 = basis.matrices[0]
    return linear_combination(((q, basis.matrices[k]) for k, q in sc.bracket(i, j).items()),
                              m0.order, m0.tag)


def _combine(sc: StructureConstants, vec: Mapping[int, Fraction], k: int) -> Dict[int, Fraction]:
    """[sum_m vec_m X_m, X_k] as a sparse vector."""
    out: Dict[int, Fraction] = {}
    for m, a in vec.items():
        for l, q in sc.bracket(m, k).items():
            t = out.get(l, 0) + a * q
            if t:
                out[l] = t
            else:
                out.pop(l, None)
    return out


def jacobi_defect(sc: StructureConstants, i: int, j: int, k: int) -> Dict[int, Fraction]:
    """[[X_i,X_j],X_k] + [[X_j,X_k],X_i] + [[X_k,X_i],X_j] as a sparse vector."""
    total: Dict[int, Fraction] = {}
    for a, b, c in ((i, j, k), (j, k, i), (k, i, j)):
        for l, q in _combine(sc, sc.bracket(a, b), c).items():
            t = total.get(l, 0) + q
            if t:
                total[l] = t
            else:
                total.pop(l, None)
    return total


def jacobi_holds(sc: StructureConstants, samples: Optional[int] = None,
                 seed: int = 0) -> bool:
    """Exhaustive over i < j < k, or ``samples`` random triples when given."""
    n = sc.dim
    if samples is None:
        triples = ((i, j, k) for i in range(n) for j in range(i + 1, n) for k in range(j + 1, n))
    else:
        rng = random.Random(seed)
        triples = (tuple(rng.sample(range(n), 3)) for _ in range(samples)) if n >= 3 else iter(())
    return all(not jacobi_defect(sc, *t) for t in triples)
