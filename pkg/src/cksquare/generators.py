"""Generator matrices of the sa / sl / sy Cayley-Klein families.

The real matrices J_ab, M_ab, H_m, E_0 of order N+1 depend on the products
omega_ab = omega_{a+1} ... omega_b. Multiplying by a unit i, j, k from the
left gives X^1, X^2, X^3, and the four block doublings give the order
2(N+1) matrices used by the sy series.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, List, Optional, Sequence, Tuple

from .matrix import (CKMatrix, block, conj_transpose, re_trace, scale_left,
                     trace)
from .scalar import FieldTag, KElement, RationalLike, rational

_ONE = Fraction(1)


class OmegaVector:
    """The N Cayley-Klein coefficients. Zero and negative values are allowed."""

    __slots__ = ("values",)

    def __init__(self, values: Iterable[RationalLike]):
        vals = tuple(rational(v) for v in values)
        if not vals:
            raise ValueError("need at least one coefficient (N >= 1)")
        self.values = vals

    @classmethod
    def ones(cls, n: int) -> "OmegaVector":
        return cls([1] * n)

    @classmethod
    def parse(cls, text: str) -> "OmegaVector":
        return cls(part for part in text.split(","))

    @property
    def N(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, OmegaVector) and self.values == other.values

    def __hash__(self) -> int:
        return hash(self.values)

    def __repr__(self) -> str:
        return "OmegaVector(" + ", ".join(str(v) for v in self.values) + ")"

    def omega(self, a: int, b: int) -> Fraction:
        """omega_ab = omega_{a+1} * ... * omega_b; equals 1 when a == b."""
        if not 0 <= a <= b <= self.N:
            raise IndexError(f"need 0 <= a <= b <= {self.N}, got ({a}, {b})")
        p = _ONE
        for v in self.values[a:b]:
            p *= v
        return p

    def has_zero(self) -> bool:
        return any(v == 0 for v in self.values)

    def pattern(self) -> str:
        """Sign pattern such as ``+-0``."""
        return "".join("0" if v == 0 else ("+" if v > 0 else "-") for v in self.values)


def as_omega(omega, N: Optional[int] = None) -> OmegaVector:
    if not isinstance(omega, OmegaVector):
        omega = OmegaVector(omega)
    if N is not None and omega.N != N:
        raise ValueError(f"omega has {omega.N} coefficients but N = {N}")
    return omega


class Series(enum.Enum):
    sa = 1
    sl = 2
    sy = 4

    @property
    def q(self) -> int:
        return self.value

    @classmethod
    def parse(cls, text) -> "Series":
        if isinstance(text, Series):
            return text
        try:
            return cls[text.strip().lower()]
        except KeyError:
            raise ValueError(f"unknown series {text!r}; expected sa, sl or sy") from None

    def order(self, N: int) -> int:
        return 2 * (N + 1) if self is Series.sy else N + 1


# Doubling tags; None means the matrix is not doubled.
DIAG = "d"
LAMBDAS = (DIAG, 1, 2, 3)
_KINDS = ("J", "M", "H", "E")


@dataclass(frozen=True)
class GeneratorLabel:
    """Symbolic name of a generator, e.g. ``M(0,1)^1;3``."""

    kind: str
    a: Optional[int] = None
    b: Optional[int] = None
    m: Optional[int] = None
    alpha: Optional[int] = None
    lam: object = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind in ("J", "M"):
            if self.a is None or self.b is None or not 0 <= self.a < self.b:
                raise ValueError(f"{self.kind} needs indices 0 <= a < b")
        elif self.kind == "H":
            if self.m is None or self.m < 1:
                raise ValueError("H needs an index m >= 1")
        if self.alpha not in (None, 1, 2, 3):
            raise ValueError(f"unit index must be 1, 2 or 3, got {self.alpha!r}")
        if self.lam not in (None,) + LAMBDAS:
            raise ValueError(f"doubling must be d, 1, 2 or 3, got {self.lam!r}")

    def __str__(self) -> str:
        if self.kind in ("J", "M"):
            s = f"{self.kind}({self.a},{self.b})"
        elif self.kind == "H":
            s = f"H({self.m})"
        else:
            s = "E0"
        if self.alpha is not None:
            s += f"^{self.alpha}"
        if self.lam is not None:
            s += f";{self.lam}"
        return s

    def sort_key(self) -> tuple:
        idx = (self.a, self.b) if self.kind in ("J", "M") else ((self.m,) if self.kind == "H" else ())
        return (_KINDS.index(self.kind), idx, self.alpha or 0,
                -1 if self.lam is None else LAMBDAS.index(self.lam))

    def undoubled(self) -> "GeneratorLabel":
        return GeneratorLabel(self.kind, self.a, self.b, self.m, self.alpha, None)

    @property
    def min_field(self) -> FieldTag:
        if self.alpha is None:
            return FieldTag.R
        return FieldTag.C if self.alpha == 1 else FieldTag.Q


_LABEL_RE = re.compile(
    r"^\s*(?:(?P<kind>[JM])\((?P<a>\d+),\s*(?P<b>\d+)\)|H\((?P<m>\d+)\)|(?P<e>E0?))"
    r"(?:\^(?P<alpha>[123]))?(?:;(?P<lam>[d123]))?\s*$")


def parse_label(text: str) -> GeneratorLabel:
    """Inverse of ``str(label)``: ``"J(0,2)"``, ``"H(2)^3"``, ``"M(0,1)^1;3"`` ..."""
    mt = _LABEL_RE.match(text)
    if not mt:
        raise ValueError(f"cannot parse generator label {text!r}")
    alpha = int(mt["alpha"]) if mt["alpha"] else None
    lam = mt["lam"]
    if lam is not None and lam != DIAG:
        lam = int(lam)
    if mt["kind"]:
        return GeneratorLabel(mt["kind"], int(mt["a"]), int(mt["b"]), alpha=alpha, lam=lam)
    if mt["m"]:
        return GeneratorLabel("H", m=int(mt["m"]), alpha=alpha, lam=lam)
    return GeneratorLabel("E", alpha=alpha, lam=lam)


def real_generator(label: GeneratorLabel, N: int, omega: OmegaVector,
                   tag: FieldTag = FieldTag.R) -> CKMatrix:
    """The undoubled, unit-free matrix J_ab, M_ab, H_m or E_0 over ``tag``."""
    n = N + 1
    one = KElement.one(tag)
    items = {}
    if label.kind in ("J", "M"):
        a, b = label.a, label.b
        if b > N:
            raise IndexError(f"index b={b} out of range for N={N}")
        w = omega.omega(a, b)
        items[(a, b)] = KElement(tag, (-w if label.kind == "J" else w,))
        items[(b, a)] = one
    elif label.kind == "H":
        if label.m > N:
            raise IndexError(f"index m={label.m} out of range for N={N}")
        items[(0, 0)] = -one
        items[(label.m, label.m)] = one
    else:
        items[(0, 0)] = one
    return CKMatrix.from_sparse(n, tag, items)


def double(x: CKMatrix, lam) -> CKMatrix:
    """Block doubling of order 2n; ``lam`` is ``"d"``, 1, 2 or 3."""
    z = CKMatrix.zeros(x.order, x.tag)
    if lam == DIAG:
        return block([[x, z], [z, x]])
    if lam == 1:
        return block([[z, x], [-x, z]])
    if lam == 2:
        return block([[z, x], [x, z]])
    if lam == 3:
        return block([[x, z], [z, -x]])
    raise ValueError(f"unknown doubling {lam!r}")


def build_generator(label: GeneratorLabel, N: int, omega, tag: FieldTag) -> CKMatrix:
    omega = as_omega(omega, N)
    tag = FieldTag.parse(tag)
    if label.alpha is not None and label.alpha >= tag.dim:
        raise ValueError(f"unit ^{label.alpha} requested over {tag.name}")
    x = real_generator(label, N, omega, tag)
    if label.alpha is not None:
        x = scale_left(KElement.unit(tag, label.alpha), x)
    if label.lam is not None:
        x = double(x, label.lam)
    return x


def metric(N: int, omega, tag: FieldTag = FieldTag.R) -> CKMatrix:
    """diag(1, omega_01, ..., omega_0N)."""
    omega = as_omega(omega, N)
    return CKMatrix.from_sparse(N + 1, tag, {
        (i, i): KElement(tag, (omega.omega(0, i),)) for i in range(N + 1)})


def metric_symplectic(N: int, omega, tag: FieldTag = FieldTag.R) -> CKMatrix:
    return double(metric(N, omega, tag), 1)


def _g_check(a: CKMatrix, g: CKMatrix, sign: int) -> bool:
    if g.order != a.order:
        raise ValueError("metric and matrix orders differ")
    if g.tag is not a.tag:
        from .matrix import embed_field
        g = embed_field(g, a.tag)
    ah = conj_transpose(a)
    lhs = ah @ g
    rhs = g @ a
    return (lhs + rhs).is_zero() if sign > 0 else (lhs - rhs).is_zero()


def is_antihermitian(a: CKMatrix, g: CKMatrix) -> bool:
    """A^dagger G + G A == 0."""
    return _g_check(a, g, +1)


def is_hermitian(a: CKMatrix, g: CKMatrix) -> bool:
    """A^dagger G - G A == 0."""
    return _g_check(a, g, -1)


Labeled = List[Tuple[GeneratorLabel, CKMatrix]]


def _pairs(N: int):
    return [(a, b) for a in range(N + 1) for b in range(a + 1, N + 1)]


def _family(kind: str, N: int, alphas: Sequence, lams: Sequence) -> List[GeneratorLabel]:
    out = []
    for alpha in alphas:
        for lam in lams:
            if kind in ("J", "M"):
                out.extend(GeneratorLabel(kind, a, b, alpha=alpha, lam=lam) for a, b in _pairs(N))
            elif kind == "H":
                out.extend(GeneratorLabel("H", m=m, alpha=alpha, lam=lam) for m in range(1, N + 1))
            else:
                out.append(GeneratorLabel("E", alpha=alpha, lam=lam))
    return out


def _units(tag: FieldTag) -> Tuple[int, ...]:
    return tuple(range(1, tag.dim))


def basis_labels(series, tag: FieldTag, N: int) -> List[GeneratorLabel]:
    series = Series.parse(series)
    tag = FieldTag.parse(tag)
    units = _units(tag)
    lam3 = (1, 2, 3)
    if series is Series.sa:
        labels = _family("J", N, [None], [None])
        labels += _family("M", N, units, [None])
        labels += _family("H", N, units, [None])
        if tag is FieldTag.Q:
            labels += _family("E", N, units, [None])
    elif series is Series.sl:
        labels = []
        for kind in ("J", "M", "H"):
            labels += _family(kind, N, (None,) + units, [None])
        if tag is FieldTag.Q:
            labels += _family("E", N, units, [None])
    else:
        labels = _family("J", N, [None], [DIAG])
        for kind in ("M", "H", "E"):
            labels += _family(kind, N, [None], lam3)
        labels += _family("J", N, units, lam3)
        labels += _family("M", N, units, [DIAG])
        labels += _family("H", N, units, [DIAG])
        if tag is FieldTag.Q:
            labels += _family("E", N, units, [DIAG])
    return sorted(labels, key=GeneratorLabel.sort_key)


def min_generator_labels(series, tag: FieldTag, N: int) -> List[GeneratorLabel]:
    series = Series.parse(series)
    tag = FieldTag.parse(tag)
    units = [u for u in (1, 2) if u < tag.dim]
    if series is Series.sa:
        labels = _family("J", N, [None], [None]) + _family("M", N, units, [None])
    elif series is Series.sl:
        labels = _family("J", N, [None], [None]) + _family("M", N, [None] + units, [None])
    else:
        labels = (_family("J", N, [None], [DIAG]) + _family("M", N, [None], [2, 1])
                  + _family("M", N, units, [DIAG]))
    return sorted(labels, key=GeneratorLabel.sort_key)


def _build_all(labels, N, omega, tag) -> Labeled:
    omega = as_omega(omega, N)
    tag = FieldTag.parse(tag)
    return [(lab, build_generator(lab, N, omega, tag)) for lab in labels]


def basis(series, tag: FieldTag, N: int, omega) -> Labeled:
    """The linear basis of the site, in canonical label order."""
    return _build_all(basis_labels(series, tag, N), N, omega, tag)


def min_generators(series, tag: FieldTag, N: int, omega) -> Labeled:
    """The short generating set whose Lie span is the whole site."""
    return _build_all(min_generator_labels(series, tag, N), N, omega, tag)


def membership_conditions(series, tag: FieldTag, N: int, omega) -> Callable[[CKMatrix], bool]:
    """Defining predicate of the matrix realization of a site."""
    series = Series.parse(series)
    tag = FieldTag.parse(tag)
    omega = as_omega(omega, N)
    if series is Series.sl:
        if tag is FieldTag.Q:
            return lambda x: x.order == N + 1 and re_trace(x) == 0
        return lambda x: x.order == N + 1 and not trace(x)
    g = metric(N, omega, tag) if series is Series.sa else metric_symplectic(N, omega, tag)
    traceless = tag is FieldTag.C

    def predicate(x: CKMatrix) -> bool:
        if x.order != g.order or not is_antihermitian(x, g):
            return False
        return not traceless or not trace(x)

    return predicate


def is_hermitian_type(label: GeneratorLabel) -> bool:
    """Whether the undoubled matrix of ``label`` is I_omega-hermitian.

    Real M, H and E are hermitian, real J is antihermitian, and a unit
    factor swaps the two; this holds for every omega, zeros included.
    """
    herm = label.kind != "J"
    return herm if label.alpha is None else not herm


def graded_lambda(label: GeneratorLabel):
    """Doubling that sends an sa/sl generator into the sy series.

    Antihermitian generators double diagonally and hermitian ones take the
    lambda = 2 form, e.g. J -> J;d, M -> M;2, M^1 -> M^1;d.
    """
    if label.lam is not None:
        raise ValueError(f"{label} is already doubled")
    return 2 if is_hermitian_type(label) else DIAG


def doubled_label(label: GeneratorLabel) -> GeneratorLabel:
    return GeneratorLabel(label.kind, label.a, label.b, label.m, label.alpha, graded_lambda(label))


def site_realization(series, tag: FieldTag, N: int, omega) -> Labeled:
    """Labeled matrices that faithfully realize the site for this omega.

    This is :func:`basis` except for the sl row with a vanishing
    coefficient: there J_ab and M_ab coincide once omega_ab = 0, so the
    row is realized through the graded doubling instead, which keeps all
    generators independent and gives the same brackets for every omega.
    """
    series = Series.parse(series)
    omega = as_omega(omega, N)
    labeled = basis(series, tag, N, omega)
    if series is Series.sl and omega.has_zero():
        return [(lab, double(m, graded_lambda(lab))) for lab, m in labeled]
    return labeled


def site_min_generators(series, tag: FieldTag, N: int, omega) -> Labeled:
    """Minimal generators expressed in the same realization as :func:`site_realization`."""
    series = Series.parse(series)
    omega = as_omega(omega, N)
    labeled = min_generators(series, tag, N, omega)
    if series is Series.sl and omega.has_zero():
        return [(lab, double(m, graded_lambda(lab))) for lab, m in labeled]
    return labeled
