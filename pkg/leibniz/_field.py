"""Ground fields: the rationals and prime fields GF(p)."""

import fractions
import re
import typing

import sympy

from . import _types


_RATIONAL_RE = re.compile(r'(-?(?:0|[1-9][0-9]*))(?:/([1-9][0-9]*))?')
_RESIDUE_RE = re.compile(r'0|[1-9][0-9]*')

MAX_PRIME = 2 ** 31


class Residue:
    """An element of GF(p) stored as its canonical residue in ``[0, p)``.

    Integers are coerced silently; mixing residues of different primes (or
    residues with fractions) raises :class:`FieldMismatch`.
    """

    __slots__ = ('value', 'p')

    value: int
    """The canonical residue."""

    p: int
    """The characteristic."""

    def __init__(self, value: int, p: int) -> None:
        self.value = value % p
        self.p = p

    def _coerce(self, other: typing.Any) -> int:
        if isinstance(other, Residue):
            if other.p != self.p:
                raise _types.FieldMismatch(
                    f"Cannot combine elements of GF({self.p}) "
                    f"and GF({other.p})")
            return other.value
        elif isinstance(other, int):
            return other
        raise _types.FieldMismatch(
            f"Cannot combine an element of GF({self.p}) with {other!r}")

    def __add__(self, other):
        return Residue(self.value + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return Residue(self.value - self._coerce(other), self.p)

    def __rsub__(self, other):
        return Residue(self._coerce(other) - self.value, self.p)

    def __mul__(self, other):
        return Residue(self.value * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * Residue(self._coerce(other), self.p).inverse()

    def __rtruediv__(self, other):
        return Residue(self._coerce(other), self.p) * self.inverse()

    def __neg__(self):
        return Residue(-self.value, self.p)

    def inverse(self) -> 'Residue':
        """Multiplicative inverse."""
        if not self.value:
            raise ZeroDivisionError(f"0 is not invertible in GF({self.p})")
        return Residue(pow(self.value, -1, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, Residue):
            return self.p == other.p and self.value == other.value
        elif isinstance(other, int):
            # only canonical residues, so that equal objects hash equally
            return 0 <= other < self.p and self.value == other
        return NotImplemented

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"Residue({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = typing.Union[fractions.Fraction, Residue]
Vector = typing.Tuple[Scalar, ...]


class FieldSpec:
    """A ground field: either the rationals or GF(p).

    :param kind: Either ``rational`` or ``prime``.
    :param p: The characteristic, required iff ``kind`` is ``prime``.
    :raises: :class:`Error` if ``p`` is missing, superfluous or not a prime
        in ``[2, 2^31)``.
    """

    __slots__ = ('kind', 'p')

    RATIONAL = 'rational'
    PRIME = 'prime'

    kind: str
    """Either ``rational`` or ``prime``."""

    p: typing.Optional[int]
    """The characteristic of a prime field, `None` for the rationals."""

    def __init__(self, kind: str = RATIONAL,
                 p: typing.Optional[int] = None) -> None:
        if kind == self.RATIONAL:
            if p is not None:
                raise _types.Error("The rational field takes no prime")
        elif kind == self.PRIME:
            if (p is None or isinstance(p, bool) or not isinstance(p, int)
                    or not 2 <= p < MAX_PRIME or not sympy.isprime(p)):
                raise _types.Error(
                    f"A prime field needs a prime 2 <= p < 2^31, got {p}")
        else:
            raise _types.Error(f"Unknown field kind {kind}")
        self.kind = kind
        self.p = p

    @classmethod
    def rational(cls) -> 'FieldSpec':
        return cls(cls.RATIONAL)

    @classmethod
    def prime(cls, p: int) -> 'FieldSpec':
        return cls(cls.PRIME, p)

    @property
    def is_prime(self) -> bool:
        return self.kind == self.PRIME

    def __call__(self, value: typing.Any) -> Scalar:
        """Convert an integer, fraction or element into this field."""
        if self.p is None:
            if isinstance(value, Residue):
                raise _types.FieldMismatch(
                    f"Cannot use an element of GF({value.p}) over Q")
            return fractions.Fraction(value)

        if isinstance(value, Residue):
            if value.p != self.p:
                raise _types.FieldMismatch(
                    f"Cannot use an element of GF({value.p}) "
                    f"over GF({self.p})")
            return value
        elif isinstance(value, fractions.Fraction):
            return (Residue(value.numerator, self.p)
                    / Residue(value.denominator, self.p))
        return Residue(int(value), self.p)

    @property
    def zero(self) -> Scalar:
        return self(0)

    @property
    def one(self) -> Scalar:
        return self(1)

    def elements(self) -> typing.List[Scalar]:
        """All elements of a prime field in residue order."""
        if self.p is None:
            raise _types.Error("The rational field cannot be enumerated")
        return [Residue(value, self.p) for value in range(self.p)]

    def parse_scalar(self, text: str) -> Scalar:
        """Parse the canonical string form of a scalar.

        ``n`` or ``n/d`` (reduced, ``d > 1``) for the rationals, the decimal
        residue for GF(p). Non-canonical spellings are rejected.
        """
        if not isinstance(text, str):
            raise ValueError(f"scalars are strings, got {text!r}")

        if self.p is None:
            match = _RATIONAL_RE.fullmatch(text)
            if match is None or text == '-0':
                raise ValueError(f"'{text}' is not a canonical rational")
            num = int(match.group(1))
            den = int(match.group(2) or 1)
            value = fractions.Fraction(num, den)
            if match.group(2) is not None and (
                    den == 1 or value.denominator != den):
                raise ValueError(f"'{text}' is not reduced")
            return value

        if _RESIDUE_RE.fullmatch(text) is None or int(text) >= self.p:
            raise ValueError(
                f"'{text}' is not a canonical residue modulo {self.p}")
        return Residue(int(text), self.p)

    def format_scalar(self, value: Scalar) -> str:
        """Canonical string form of a scalar."""
        value = self(value)
        if isinstance(value, fractions.Fraction) and value.denominator != 1:
            return f"{value.numerator}/{value.denominator}"
        return str(int(value))

    def __eq__(self, other):
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return self.kind == other.kind and self.p == other.p

    def __hash__(self):
        return hash((self.kind, self.p))

    def __repr__(self):
        return f"FieldSpec({self.kind!r}, {self.p!r})"

    def __str__(self):
        return 'Q' if self.p is None else f'GF({self.p})'


def check_same(*fields: FieldSpec) -> FieldSpec:
    """Return the common field or raise :class:`FieldMismatch`."""
    first, *rest = fields
    for other in rest:
        if other != first:
            raise _types.FieldMismatch(
                f"Expected structures over {first}, got {other}")
    return first
