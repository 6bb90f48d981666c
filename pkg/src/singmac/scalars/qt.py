"""Exact rational functions in q and t."""
from fractions import Fraction
from math import gcd

from .poly2 import Poly2, poly_gcd


def _split_monomial(p):
    """p = q^a t^b * p0 with p0 a polynomial divisible by neither q nor t."""
    a, b = p.min_exponents()
    return a, b, p.shift(-a, -b)


class QtScalar:
    """Reduced fraction numer/denom of integer polynomials in q, t.

    Canonical form: both parts are polynomials (no negative exponents),
    gcd(numer, denom) = 1, the integer content of numer and denom together
    is 1, and the graded-lex leading coefficient of denom is positive.
    """

    __slots__ = ("numer", "denom", "_hash")

    def __init__(self, numer, denom=None):
        if isinstance(numer, (int, Fraction)):
            fr = Fraction(numer)
            numer = Poly2.const(fr.numerator)
            if denom is None:
                denom = Poly2.const(fr.denominator)
            else:
                denom = denom * fr.denominator
        if denom is None:
            denom = Poly2.const(1)
        elif isinstance(denom, int):
            denom = Poly2.const(denom)
        if denom.is_zero():
            raise ZeroDivisionError("zero denominator")
        self._set(*_reduce(numer, denom))

    def _set(self, numer, denom):
        self.numer = numer
        self.denom = denom
        self._hash = None

    @classmethod
    def _trusted(cls, numer, denom):
        """Build from a coprime pair of Laurent polynomials (only units may be shared)."""
        x = cls.__new__(cls)
        x._set(*_normalize(numer, denom))
        return x

    @classmethod
    def q(cls):
        return cls._trusted(Poly2.mono(1, 0), Poly2.const(1))

    @classmethod
    def t(cls):
        return cls._trusted(Poly2.mono(0, 1), Poly2.const(1))

    @classmethod
    def monomial(cls, a, b, c=1):
        """c * q^a t^b for integers a, b (possibly negative)."""
        return cls._trusted(Poly2.mono(a, b, c), Poly2.const(1))

    @classmethod
    def from_poly(cls, p):
        return cls._trusted(p, Poly2.const(1))

    def is_zero(self):
        return self.numer.is_zero()

    def __bool__(self):
        return not self.numer.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QtScalar(other)
        if not isinstance(other, QtScalar):
            return NotImplemented
        return self.numer == other.numer and self.denom == other.denom

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.numer, self.denom))
        return self._hash

    def __repr__(self):
        if self.denom == Poly2.const(1):
            return f"QtScalar({self.numer!r})"
        return f"QtScalar(({self.numer!r}) / ({self.denom!r}))"

    def _coerce(self, other):
        if isinstance(other, QtScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return QtScalar(other)
        if isinstance(other, Poly2):
            return QtScalar(other)
        return None

    def __neg__(self):
        x = QtScalar.__new__(QtScalar)
        x._set(-self.numer, self.denom)
        return x

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.denom == other.denom:
            return QtScalar(self.numer + other.numer, self.denom)
        return QtScalar(self.numer * other.denom + other.numer * self.denom,
                        self.denom * other.denom)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return QtScalar(0)
        # cross-cancel to keep the gcd work small
        g1 = _gcd_or_one(self.numer, other.denom)
        g2 = _gcd_or_one(other.numer, self.denom)
        n1, d2 = self.numer.exact_div(g1), other.denom.exact_div(g1)
        n2, d1 = other.numer.exact_div(g2), self.denom.exact_div(g2)
        return QtScalar._trusted(n1 * n2, d1 * d2)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return QtScalar._trusted(self.denom, self.numer)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        return QtScalar._trusted(self.numer ** e, self.denom ** e)

    def mul_monomial(self, a, b):
        return QtScalar._trusted(self.numer.shift(a, b), self.denom)

    def invert_t(self):
        """Substitute t -> 1/t."""
        return QtScalar._trusted(self.numer.substitute_t_inverse(),
                                 self.denom.substitute_t_inverse())

    def to_json(self):
        return {"numer": self.numer.to_json(), "denom": self.denom.to_json()}

    @classmethod
    def from_json(cls, data):
        return cls(Poly2.from_json(data["numer"]), Poly2.from_json(data["denom"]))


def _gcd_or_one(a, b):
    a0 = _split_monomial(a)[2]
    b0 = _split_monomial(b)[2]
    if a0.is_constant() or b0.is_constant():
        return Poly2.const(1)
    return poly_gcd(a0, b0)


def _reduce(numer, denom):
    if numer.is_zero():
        return Poly2.const(0), Poly2.const(1)
    an, bn, n0 = _split_monomial(numer)
    ad, bd, d0 = _split_monomial(denom)
    if not (n0.is_constant() or d0.is_constant()):
        g = poly_gcd(n0, d0)
        if not g.is_constant():
            n0 = n0.exact_div(g)
            d0 = d0.exact_div(g)
    return _normalize(n0.shift(an, bn), d0.shift(ad, bd))


def _normalize(numer, denom):
    """Move monomials, fix integer content and sign. Assumes coprime input."""
    if numer.is_zero():
        return Poly2.const(0), Poly2.const(1)
    an, bn, n0 = _split_monomial(numer)
    ad, bd, d0 = _split_monomial(denom)
    a, b = an - ad, bn - bd
    n0 = n0.shift(max(a, 0), max(b, 0))
    d0 = d0.shift(max(-a, 0), max(-b, 0))
    c = gcd(n0.content(), d0.content())
    if d0.leading_term()[1] < 0:
        c = -c
    if c != 1:
        n0 = n0.divide_int(c)
        d0 = d0.divide_int(c)
    return n0, d0


def q():
    return QtScalar.q()


def t():
    return QtScalar.t()
