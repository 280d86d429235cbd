"""Killing form, signature, dimension count and naming of the square's sites."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Mapping, Sequence, Tuple

from . import printed
from .generators import OmegaVector, Series, as_omega, site_realization
from .scalar import FieldTag, format_rational
from .span import LieBasis, StructureConstants, lie_closure, structure_constants

KillingMatrix = List[List[Fraction]]


@dataclass(frozen=True)
class Signature:
    plus: int
    minus: int
    zero: int

    @property
    def n(self) -> int:
        return self.plus + self.minus + self.zero

    def __str__(self) -> str:
        return f"({self.plus},{self.minus},{self.zero})"


def killing_form(sc: StructureConstants) -> KillingMatrix:
    """B_ij = trace(ad X_i ad X_j), exactly."""
    n = sc.dim
    ads = [sc.ad(i) for i in range(n)]
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        ai = ads[i]
        for j in range(i, n):
            aj = ads[j]
            small, big = (ai, aj) if len(ai) <= len(aj) else (aj, ai)
            s = Fraction(0)
            for (r, c), q in small.items():
                t = big.get((c, r))
                if t:
                    s += q * t
            out[i][j] = out[j][i] = s
    return out


def signature(form: Sequence[Sequence]) -> Signature:
    """Inertia of a symmetric rational matrix by congruence elimination.

    Non-zero diagonal pivots are taken first; when the remaining diagonal is
    zero but an off-diagonal entry is not, the 2x2 hyperbolic block is
    eliminated at once and contributes one positive and one negative square.
    """
    a = [[Fraction(x) for x in row] for row in form]
    n = len(a)
    for i in range(n):
        for j in range(i):
            if a[i][j] != a[j][i]:
                raise ValueError("form is not symmetric")
    live = list(range(n))
    plus = minus = 0
    while live:
        piv = next((i for i in live if a[i][i]), None)
        if piv is not None:
            d = a[piv][piv]
            if d > 0:
                plus += 1
            else:
                minus += 1
            live.remove(piv)
            row = a[piv]
            for k in live:
                f = row[k]
                if not f:
                    continue
                f /= d
                ak = a[k]
                for l in live:
                    if row[l]:
                        ak[l] -= f * row[l]
            continue
        pair = next(((i, j) for i in live for j in live if i < j and a[i][j]), None)
        if pair is None:
            break
        i, j = pair
        b = a[i][j]
        plus += 1
        minus += 1
        live.remove(i)
        live.remove(j)
        ri, rj = a[i], a[j]
        for k in live:
            ki, kj = ri[k], rj[k]
            if not ki and not kj:
                continue
            ak = a[k]
            for l in live:
                ak[l] -= (ki * rj[l] + kj * ri[l]) / b
    return Signature(plus, minus, len(live))


def character(sig: Signature) -> int:
    return sig.plus - sig.minus


def is_semisimple(form: Sequence[Sequence]) -> bool:
    return signature(form).zero == 0


def dimension_formula(p: int, q: int, N: int) -> int:
    """Dimension of the site in column p and row q (p, q in 1, 2, 4)."""
    if p not in (1, 2, 4) or q not in (1, 2, 4):
        raise ValueError(f"p and q must be 1, 2 or 4; got {p}, {q}")
    if N < 1:
        raise ValueError("N must be positive")
    return p * q * N * (N + 1) // 2 + (p + q - 2) * N + (3 if p == 4 else 0) + (3 if q == 4 else 0)


# Cartan series symbols of the complexified algebras, per site.
def cartan_label(series, tag: FieldTag, N: int) -> str:
    series = Series.parse(series)
    n = N + 1
    table = {
        (Series.sa, FieldTag.R): f"B_{N // 2}" if N % 2 == 0 else f"D_{n // 2}",
        (Series.sa, FieldTag.C): f"A_{N}",
        (Series.sa, FieldTag.Q): f"C_{n}",
        (Series.sl, FieldTag.R): f"A_{N}",
        (Series.sl, FieldTag.C): f"A_{N}⊕A_{N}",
        (Series.sl, FieldTag.Q): f"A_{2 * n - 1}",
        (Series.sy, FieldTag.R): f"C_{n}",
        (Series.sy, FieldTag.C): f"A_{2 * n - 1}",
        (Series.sy, FieldTag.Q): f"D_{2 * n}",
    }
    return table[(series, tag)]


def cartan_dimension(label: str) -> int:
    """Dimension of the complex algebra named by a Cartan label such as ``A_2⊕A_2``."""
    total = 0
    for part in label.replace(" ", "").split("⊕"):
        mt = re.fullmatch(r"([ABCDEFG])_(\d+)", part)
        if not mt:
            raise ValueError(f"unsupported Cartan label {label!r}")
        kind, n = mt.group(1), int(mt.group(2))
        if kind == "A":
            total += n * (n + 2)
        elif kind in "BC":
            total += n * (2 * n + 1)
        elif kind == "D":
            total += n * (2 * n - 1)
        elif kind == "F" and n == 4:
            total += 52
        elif kind == "G" and n == 2:
            total += 14
        elif kind == "E":
            total += {1: 3, 2: 6, 3: 11, 4: 24, 5: 45, 6: 78, 7: 133, 8: 248}[n]
        else:
            raise ValueError(f"unsupported Cartan label {label!r}")
    return total


def cartan_aliases(series, tag: FieldTag, N: int) -> Tuple[str, ...]:
    """Label plus the printed low-dimensional coincidences (N = 1, 2 only)."""
    series = Series.parse(series)
    if N in printed.EXTENDED_LABELS:
        row = printed.ROWS.index(series.name)
        col = printed.COLUMNS.index(tag.name)
        return printed.aliases(printed.EXTENDED_LABELS[N][row][col])
    return (cartan_label(series, tag, N),)


def _sa_index(omega: OmegaVector) -> Tuple[int, int]:
    diag = [omega.omega(0, i) for i in range(omega.N + 1)]
    return sum(1 for d in diag if d > 0), sum(1 for d in diag if d < 0)


def standard_name(series, tag: FieldTag, N: int, omega) -> str:
    series = Series.parse(series)
    omega = as_omega(omega, N)
    n = N + 1
    if omega.has_zero():
        order = series.order(N)
        return f"contracted: {series.name}_{{{omega.pattern()}}}({order},{tag.symbol})"
    if series is Series.sa:
        p, q = _sa_index(omega)
        base = {FieldTag.R: "so", FieldTag.C: "su", FieldTag.Q: "sp"}[tag]
        return f"{base}({n})" if q == 0 else f"{base}({p},{q})"
    if series is Series.sl:
        return {FieldTag.R: f"sl({n},ℝ)", FieldTag.C: f"sl({n},ℂ)",
                FieldTag.Q: f"su*({2 * n})"}[tag]
    return {FieldTag.R: f"sp({2 * n},ℝ)", FieldTag.C: f"su({n},{n})",
            FieldTag.Q: f"so*({4 * n})"}[tag]


def identify(series, tag: FieldTag, N: int, omega) -> Tuple[str, str]:
    """(standard name, Cartan label); contracted sites are labelled non-simple."""
    omega = as_omega(omega, N)
    name = standard_name(series, tag, N, omega)
    if omega.has_zero():
        return name, "non-simple"
    return name, cartan_label(series, tag, N)


@dataclass(frozen=True)
class AlgebraDescriptor:
    series: Series
    field: FieldTag
    N: int
    omega: OmegaVector
    dim: int
    signature: Signature
    character: int
    standard_name: str
    cartan_label: str

    @property
    def semisimple(self) -> bool:
        return self.signature.zero == 0

    def to_json(self) -> dict:
        return {
            "series": self.series.name,
            "field": self.field.name,
            "N": self.N,
            "omega": [format_rational(w) for w in self.omega],
            "dim": self.dim,
            "signature": {"plus": self.signature.plus, "minus": self.signature.minus,
                          "zero": self.signature.zero},
            "character": self.character,
            "standard_name": self.standard_name,
            "cartan_label": self.cartan_label,
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "AlgebraDescriptor":
        sig = data["signature"]
        return cls(
            series=Series.parse(data["series"]),
            field=FieldTag.parse(data["field"]),
            N=data["N"],
            omega=OmegaVector(data["omega"]),
            dim=data["dim"],
            signature=Signature(sig["plus"], sig["minus"], sig["zero"]),
            character=data["character"],
            standard_name=data["standard_name"],
            cartan_label=data["cartan_label"],
        )

    def summary(self) -> str:
        if self.cartan_label == "non-simple":
            return (f"{self.standard_name}, non-simple, dim {self.dim}, "
                    f"signature {self.signature}")
        return (f"{self.standard_name}, {self.cartan_label}, dim {self.dim}, "
                f"signature {self.signature}")


@dataclass
class SiteAnalysis:
    descriptor: AlgebraDescriptor
    basis: LieBasis
    constants: StructureConstants
    killing: KillingMatrix


def site_basis(series, tag: FieldTag, N: int, omega) -> LieBasis:
    """Independent labeled basis of the site's realization."""
    labeled = site_realization(series, tag, N, omega)
    return LieBasis.from_matrices([m for _, m in labeled], [lab for lab, _ in labeled])


def analyze_site(series, tag: FieldTag, N: int, omega) -> SiteAnalysis:
    series = Series.parse(series)
    tag = FieldTag.parse(tag)
    omega = as_omega(omega, N)
    basis = site_basis(series, tag, N, omega)
    # raises ClosureBoundExceeded if the realization is not a Lie algebra
    lie_closure(basis.matrices, max_dim=basis.dim)
    sc = structure_constants(basis)
    form = killing_form(sc)
    sig = signature(form)
    name, label = identify(series, tag, N, omega)
    desc = AlgebraDescriptor(series, tag, N, omega, basis.dim, sig, character(sig), name, label)
    return SiteAnalysis(desc, basis, sc, form)


def describe(series, tag, N: int, omega) -> AlgebraDescriptor:
    return analyze_site(series, tag, N, omega).descriptor


_NAME_RE = re.compile(r"^(so|su|sp|sl|su\*|so\*)\((\d+)(?:,(\d+|ℝ|ℂ))?\)$")


def real_form_invariants(name: str) -> Tuple[int, int]:
    """(dimension, dimension of a maximal compact subalgebra) of a classical real form.

    Accepts the names produced by :func:`standard_name` for simple sites.
    """
    mt = _NAME_RE.match(name)
    if not mt:
        raise ValueError(f"not a classical real form name: {name!r}")
    base, x, y = mt.group(1), int(mt.group(2)), mt.group(3)
    if base == "sl":
        n = x
        if y == "ℝ":
            return n * n - 1, n * (n - 1) // 2
        if y == "ℂ":
            return 2 * (n * n - 1), n * n - 1
        raise ValueError(name)
    if base == "sp" and y == "ℝ":
        n = x // 2
        return n * (2 * n + 1), n * n
    if base == "su*":
        n = x // 2
        return 4 * n * n - 1, n * (2 * n + 1)
    if base == "so*":
        n = x // 2
        return n * (2 * n - 1), n * n
    p, q = x, int(y) if y else 0
    n = p + q
    if base == "so":
        return n * (n - 1) // 2, p * (p - 1) // 2 + q * (q - 1) // 2
    if base == "su":
        return n * n - 1, p * p + q * q - 1 if q else n * n - 1
    return n * (2 * n + 1), p * (2 * p + 1) + q * (2 * q + 1)


def expected_signature(name: str) -> Signature:
    """Killing signature of a named real form: positive on p, negative on k.

    so(2) and so(1,1) are abelian, so their Killing form vanishes.
    """
    dim, compact = real_form_invariants(name)
    if name in ("so(2)", "so(1,1)"):
        return Signature(0, 0, 1)
    return Signature(dim - compact, compact, 0)
