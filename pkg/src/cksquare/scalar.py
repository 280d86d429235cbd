"""Exact scalars: rationals and the division algebras R, C, H.

Every element carries four rational coordinates on the units (1, i, j, k);
the field tag says how many of them may be non-zero.
"""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Sequence, Union

RationalLike = Union[int, Fraction, str]

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rational(value: RationalLike) -> Fraction:
    """Parse an exact rational. Floats are rejected on purpose."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if "." in text or "e" in text.lower():
            raise ValueError(f"not an exact rational: {value!r}")
        return Fraction(text)
    raise TypeError(f"cannot make an exact rational from {type(value).__name__}")


def format_rational(q: Fraction) -> str:
    """Serialize as ``"num/den"`` (or ``"num"`` when the denominator is 1)."""
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


class FieldTag(enum.Enum):
    R = 1
    C = 2
    Q = 4

    @property
    def dim(self) -> int:
        return self.value

    @property
    def symbol(self) -> str:
        return {"R": "ℝ", "C": "ℂ", "Q": "ℍ"}[self.name]

    def __lt__(self, other: "FieldTag") -> bool:
        if not isinstance(other, FieldTag):
            return NotImplemented
        return self.value < other.value

    def __le__(self, other: "FieldTag") -> bool:
        if not isinstance(other, FieldTag):
            return NotImplemented
        return self.value <= other.value

    @classmethod
    def parse(cls, text: Union[str, "FieldTag"]) -> "FieldTag":
        if isinstance(text, FieldTag):
            return text
        aliases = {"R": cls.R, "ℝ": cls.R, "C": cls.C, "ℂ": cls.C,
                   "Q": cls.Q, "H": cls.Q, "ℍ": cls.Q}
        try:
            return aliases[text.strip().upper() if text.isascii() else text.strip()]
        except KeyError:
            raise ValueError(f"unknown field {text!r}; expected R, C or Q") from None


class TagMismatch(ValueError):
    """Raised when scalars or matrices over different fields are combined."""


class KElement:
    """An element of R, C or H with exact rational coordinates."""

    __slots__ = ("tag", "c")

    def __init__(self, tag: FieldTag, coords: Iterable[RationalLike] = (0,)):
        c = [rational(x) for x in coords]
        if len(c) > 4:
            raise ValueError("at most four coordinates")
        c += [_ZERO] * (4 - len(c))
        if any(c[tag.dim:]):
            raise ValueError(f"coordinates {c} do not lie in {tag.name}")
        self.tag = tag
        self.c = tuple(c)

    @classmethod
    def _raw(cls, tag: FieldTag, c: tuple) -> "KElement":
        obj = object.__new__(cls)
        obj.tag = tag
        obj.c = c
        return obj

    @classmethod
    def zero(cls, tag: FieldTag) -> "KElement":
        return cls._raw(tag, (_ZERO, _ZERO, _ZERO, _ZERO))

    @classmethod
    def one(cls, tag: FieldTag) -> "KElement":
        return cls._raw(tag, (_ONE, _ZERO, _ZERO, _ZERO))

    @classmethod
    def unit(cls, tag: FieldTag, alpha: int) -> "KElement":
        """The unit 1, i, j or k (alpha = 0..3) inside ``tag``."""
        if not 0 <= alpha < tag.dim:
            raise ValueError(f"unit {alpha} does not exist in {tag.name}")
        c = [_ZERO] * 4
        c[alpha] = _ONE
        return cls._raw(tag, tuple(c))

    def __bool__(self) -> bool:
        c = self.c
        return bool(c[0] or c[1] or c[2] or c[3])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, KElement):
            return NotImplemented
        return self.tag is other.tag and self.c == other.c

    def __hash__(self) -> int:
        return hash((self.tag, self.c))

    def __repr__(self) -> str:
        return f"KElement({self.tag.name}, {self})"

    def __str__(self) -> str:
        parts = []
        for q, u in zip(self.c, ("", "i", "j", "k")):
            if q:
                parts.append(f"{format_rational(q)}{u}")
        return " + ".join(parts) if parts else "0"

    def __add__(self, other: "KElement") -> "KElement":
        _check(self, other)
        a, b = self.c, other.c
        return KElement._raw(self.tag, (a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]))

    def __sub__(self, other: "KElement") -> "KElement":
        _check(self, other)
        a, b = self.c, other.c
        return KElement._raw(self.tag, (a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]))

    def __neg__(self) -> "KElement":
        a = self.c
        return KElement._raw(self.tag, (-a[0], -a[1], -a[2], -a[3]))

    def __mul__(self, other: "KElement") -> "KElement":
        return k_mul(self, other)

    def scale(self, q: Fraction) -> "KElement":
        a = self.c
        return KElement._raw(self.tag, (q * a[0], q * a[1], q * a[2], q * a[3]))

    def to_strings(self) -> list:
        return [format_rational(q) for q in self.c]

    @classmethod
    def from_strings(cls, tag: FieldTag, coords: Sequence[str]) -> "KElement":
        if len(coords) != 4:
            raise ValueError("expected four coordinates")
        return cls(tag, coords)


def _check(x: KElement, y: KElement) -> None:
    if x.tag is not y.tag:
        raise TagMismatch(f"cannot combine {x.tag.name} with {y.tag.name}")


def k_mul(x: KElement, y: KElement) -> KElement:
    """Product in the division algebra (non-commutative over H)."""
    _check(x, y)
    a0, a1, a2, a3 = x.c
    b0, b1, b2, b3 = y.c
    tag = x.tag
    if tag is FieldTag.R:
        return KElement._raw(tag, (a0 * b0, _ZERO, _ZERO, _ZERO))
    if tag is FieldTag.C:
        return KElement._raw(tag, (a0 * b0 - a1 * b1, a0 * b1 + a1 * b0, _ZERO, _ZERO))
    return KElement._raw(tag, (
        a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
        a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
        a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
        a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
    ))


def k_conj(x: KElement) -> KElement:
    a = x.c
    return KElement._raw(x.tag, (a[0], -a[1], -a[2], -a[3]))


def k_real_part(x: KElement) -> Fraction:
    return x.c[0]


def k_norm(x: KElement) -> Fraction:
    """Squared norm: the sum of squared coordinates."""
    return sum((q * q for q in x.c), _ZERO)


def k_embed(x: KElement, tag: FieldTag) -> KElement:
    """Reinterpret ``x`` inside a field at least as large as its own."""
    if tag.dim < x.tag.dim:
        raise ValueError(f"cannot embed {x.tag.name} into {tag.name}")
    return KElement._raw(tag, x.c)
