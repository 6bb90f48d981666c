"""The specialization (q, t) = (omega u^(-n/g), u^(m/g)) and the field Q(zeta_M)(u)."""
from fractions import Fraction
from math import gcd

from .cyclotomic import CycloField, cyclotomic_poly
from .poly2 import Poly2


class PoleError(ArithmeticError):
    """A denominator vanishes identically on the specialization curve."""

    def __init__(self, message, residual=None, witness=None):
        super().__init__(message)
        self.residual = residual
        self.witness = witness


class Specialization:
    """Parameters (m, n, k) of the curve; k is stored normalized.

    omega = exp(2 pi i k / m) = zeta_M ** zeta_exp with M = m / gcd(k, m).
    """

    __slots__ = ("m", "n", "k", "g", "M", "zeta_exp", "q_u", "t_u", "field")

    def __init__(self, m, n, k):
        if m < 1:
            raise ValueError(f"m must be positive, got {m}")
        if n < 2:
            raise ValueError(f"n must be at least 2, got {n}")
        g = gcd(m, n)
        if gcd(k, g) != 1:
            raise ValueError(f"gcd(k, g) = gcd({k}, {g}) must be 1")
        k = k % g if g > 1 else 0
        self.m, self.n, self.k, self.g = m, n, k, g
        c = gcd(k, m)
        self.M = m // c
        self.zeta_exp = k // c
        self.q_u = -n // g
        self.t_u = m // g
        self.field = CycloField(self.M)

    def __eq__(self, other):
        return isinstance(other, Specialization) and \
            (self.m, self.n, self.k) == (other.m, other.n, other.k)

    def __hash__(self):
        return hash((self.m, self.n, self.k))

    def __repr__(self):
        return f"Specialization(m={self.m}, n={self.n}, k={self.k})"

    @property
    def omega_order(self):
        return self.M

    def image_exponents(self, a, b):
        """q^a t^b maps to zeta_M^s u^e; returns (s mod M, e)."""
        return (a * self.zeta_exp) % self.M, a * self.q_u + b * self.t_u

    def monomial_is_one(self, a, b):
        s, e = self.image_exponents(a, b)
        return s == 0 and e == 0

    def map_poly(self, p):
        """Image of a Laurent polynomial in q, t as a CycloLaurent."""
        F = self.field
        out = {}
        for (a, b), c in p.terms.items():
            s, e = self.image_exponents(a, b)
            vec = F.powers[s]
            cur = out.get(e)
            if cur is None:
                out[e] = tuple(c * v for v in vec)
            else:
                out[e] = tuple(x + c * v for x, v in zip(cur, vec))
        return CycloLaurent(F, out)

    def to_json(self):
        return {"m": self.m, "n": self.n, "k": self.k, "g": self.g,
                "omega_order": self.M}


def normalize_specialization(m, n, k, N=None):
    if N is not None and n > N:
        raise ValueError(f"n = {n} exceeds N = {N}")
    return Specialization(m, n, k)


def vanishing_exponent(a, b, spec):
    """p with (a, b) = (p m, p n) when q^a t^b is 1 on the curve, else None."""
    if not spec.monomial_is_one(a, b):
        return None
    if a % spec.m or b % spec.n or a // spec.m != b // spec.n:
        # cannot happen: the image is 1 only on multiples of (m, n)
        raise AssertionError(f"unexpected vanishing exponent ({a}, {b})")
    return a // spec.m


class CycloLaurent:
    """Laurent polynomial in u with coefficients in Q(zeta_M).

    Stored as {exponent: coefficient vector}; vectors are reduced mod Phi_M,
    so the representation is canonical and zero has no terms.
    """

    __slots__ = ("F", "terms")

    def __init__(self, F, terms):
        self.F = F
        self.terms = {e: v for e, v in terms.items() if any(v)}

    @classmethod
    def _raw(cls, F, terms):
        x = cls.__new__(cls)
        x.F = F
        x.terms = terms
        return x

    @classmethod
    def const(cls, F, c):
        return cls(F, {0: F.from_int(c)})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycloLaurent.const(self.F, other)
        return isinstance(other, CycloLaurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        return f"CycloLaurent(M={self.F.M}, {dict(sorted(self.terms.items()))})"

    def __neg__(self):
        return CycloLaurent._raw(self.F, {e: tuple(-x for x in v)
                                          for e, v in self.terms.items()})

    def __add__(self, other):
        out = dict(self.terms)
        for e, v in other.terms.items():
            cur = out.get(e)
            if cur is None:
                out[e] = v
            else:
                w = tuple(x + y for x, y in zip(cur, v))
                if any(w):
                    out[e] = w
                else:
                    del out[e]
        return CycloLaurent._raw(self.F, out)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        F = self.F
        if isinstance(other, int):
            if other == 0:
                return CycloLaurent._raw(F, {})
            return CycloLaurent._raw(F, {e: tuple(x * other for x in v)
                                         for e, v in self.terms.items()})
        out = {}
        for e1, v1 in self.terms.items():
            for e2, v2 in other.terms.items():
                w = F.mul(v1, v2)
                e = e1 + e2
                cur = out.get(e)
                out[e] = w if cur is None else tuple(x + y for x, y in zip(cur, w))
        return CycloLaurent(F, out)

    __rmul__ = __mul__

    def mul_unit(self, s, e):
        """Multiply by zeta_M^s u^e."""
        F = self.F
        if s % F.M == 0:
            if e == 0:
                return self
            return CycloLaurent._raw(F, {x + e: v for x, v in self.terms.items()})
        z = F.powers[s % F.M]
        return CycloLaurent._raw(F, {x + e: F.mul(v, z) for x, v in self.terms.items()})

    def to_dense(self):
        """(low exponent, dense list of vectors)."""
        lo = min(self.terms)
        hi = max(self.terms)
        zero = self.F.zero
        return lo, [self.terms.get(e, zero) for e in range(lo, hi + 1)]

    def to_json(self):
        return [[e, [str(x) for x in v]] for e, v in sorted(self.terms.items())]


# dense univariate polynomials over Q(zeta_M): lists of vectors, constant first

def _ktrim(F, a):
    while a and not any(a[-1]):
        a.pop()
    return a


def _kmul(F, a, b):
    if not a or not b:
        return []
    out = [F.zero] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if any(x):
            for j, y in enumerate(b):
                if any(y):
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _ktrim(F, out)


def _kdivmod(F, a, b):
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    # a monic divisor keeps integral inputs integral
    inv_lb = None if b[-1] == F.one else F.inv(b[-1])
    quo = [F.zero] * (len(r) - db)
    for k in range(len(r) - 1, db - 1, -1):
        if not any(r[k]):
            continue
        c = r[k] if inv_lb is None else F.mul(r[k], inv_lb)
        quo[k - db] = c
        for j in range(db + 1):
            if any(b[j]):
                r[k - db + j] = F.sub(r[k - db + j], F.mul(c, b[j]))
    return _ktrim(F, quo), _ktrim(F, r[:db])


def _kmonic(F, a):
    inv = F.inv(a[-1])
    return [F.mul(x, inv) for x in a]


def _kgcd(F, a, b):
    while b:
        _, r = _kdivmod(F, a, b)
        a, b = b, r
    return _kmonic(F, a)


def _strip_low(F, dense_poly):
    """Remove leading zero vectors at the low end, returning the count removed."""
    k = 0
    while k < len(dense_poly) and not any(dense_poly[k]):
        k += 1
    return k, dense_poly[k:]


def divide_by_squarefree_factors(F, numer, factors):
    """numer / prod(factors) as a reduced SpecScalar.

    Each factor must be squarefree in u (binomials a u^x - b u^y are). The
    common part is cancelled one factor at a time, so every gcd runs against
    a low-degree factor instead of the whole product; the result is the same
    canonical fraction SpecScalar(F, numer, prod(factors)) would produce.
    """
    if numer.is_zero():
        return SpecScalar(F, numer)
    low, nd = numer.to_dense()
    nd = _ktrim(F, [F.normalize(v) for v in nd])
    den = [F.one]
    unit = F.one        # leading coefficients taken out to make factors monic
    for f in factors:
        if f.is_zero():
            raise ZeroDivisionError("zero factor in specialized denominator")
        lf, fd = f.to_dense()
        fd = _ktrim(F, [F.normalize(v) for v in fd])
        k, fd = _strip_low(F, fd)
        low -= lf + k
        if len(fd) > 1:
            unit = F.mul(unit, fd[-1])
            fd = [F.normalize(v) for v in _kmonic(F, fd)]
            _, r = _kdivmod(F, nd, fd)
            g = [F.normalize(v) for v in (_kgcd(F, fd, r) if r else fd)]
            if len(g) > 1:
                nd, r1 = _kdivmod(F, nd, g)
                fd, r2 = _kdivmod(F, fd, g)
                assert not r1 and not r2
                nd = [F.normalize(v) for v in nd]
                fd = [F.normalize(v) for v in fd]
        den = _kmul(F, den, fd)
    den = [F.mul(v, unit) for v in den]
    return SpecScalar._make(F, low, nd, den, reduce=False)


class SpecScalar:
    """Reduced fraction u^e N(u) / D(u) over Q(zeta_M).

    Canonical form: N(0) != 0 (or N = 0), D(0) != 0, D monic, gcd(N, D) = 1.
    """

    __slots__ = ("F", "low", "numer", "denom", "_hash")

    def __init__(self, F, numer, denom=None):
        """numer, denom: CycloLaurent (denom defaults to 1)."""
        self.F = F
        self._hash = None
        if numer.is_zero():
            self.low, self.numer, self.denom = 0, (), (F.one,)
            return
        if denom is None:
            lo, nd = numer.to_dense()
            self._set(lo, nd, [F.one], reduce=False)
            return
        if denom.is_zero():
            raise ZeroDivisionError("zero denominator in specialized field")
        ln, nd = numer.to_dense()
        ld, dd = denom.to_dense()
        self._set(ln - ld, nd, dd, reduce=True)

    def _set(self, low, nd, dd, reduce):
        F = self.F
        nd = _ktrim(F, [F.normalize(v) for v in nd])
        dd = _ktrim(F, [F.normalize(v) for v in dd])
        k, nd = _strip_low(F, nd)
        low += k
        k, dd = _strip_low(F, dd)
        low -= k
        if reduce and len(dd) > 1 and len(nd) > 1:
            g = _kgcd(F, nd, dd)
            if len(g) > 1:
                nd, r1 = _kdivmod(F, nd, g)
                dd, r2 = _kdivmod(F, dd, g)
                assert not r1 and not r2
        inv = F.inv(dd[-1])
        self.low = low
        self.numer = tuple(F.normalize(F.mul(v, inv)) for v in nd)
        self.denom = tuple(F.normalize(F.mul(v, inv)) for v in dd)

    @classmethod
    def _make(cls, F, low, nd, dd, reduce=True):
        x = cls.__new__(cls)
        x.F = F
        x._hash = None
        if not _ktrim(F, list(nd)):
            x.low, x.numer, x.denom = 0, (), (F.one,)
            return x
        x._set(low, list(nd), list(dd), reduce)
        return x

    @classmethod
    def from_int(cls, F, c):
        return cls(F, CycloLaurent.const(F, c))

    def is_zero(self):
        return not self.numer

    def __bool__(self):
        return bool(self.numer)

    def __eq__(self, other):
        if isinstance(other, int):
            other = SpecScalar.from_int(self.F, other)
        if not isinstance(other, SpecScalar):
            return NotImplemented
        return (self.F.M == other.F.M and self.low == other.low
                and self.numer == other.numer and self.denom == other.denom)

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.F.M, self.low, self.numer, self.denom))
        return self._hash

    def __repr__(self):
        return (f"SpecScalar(M={self.F.M}, u^{self.low} * {list(self.numer)}"
                f" / {list(self.denom)})")

    def _coerce(self, other):
        if isinstance(other, SpecScalar):
            return other
        if isinstance(other, int):
            return SpecScalar.from_int(self.F, other)
        return None

    def __neg__(self):
        F = self.F
        return SpecScalar._make(F, self.low, [F.neg(v) for v in self.numer],
                                self.denom, reduce=False)

    def _parts(self, other):
        """Bring both to a common low exponent: returns (low, n1, n2)."""
        F = self.F
        low = min(self.low, other.low)
        n1 = [F.zero] * (self.low - low) + list(self.numer)
        n2 = [F.zero] * (other.low - low) + list(other.numer)
        return low, n1, n2

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        F = self.F
        low, n1, n2 = self._parts(other)
        if self.denom == other.denom:
            num = _kadd(F, n1, n2)
            return SpecScalar._make(F, low, num, self.denom)
        num = _kadd(F, _kmul(F, n1, list(other.denom)), _kmul(F, n2, list(self.denom)))
        return SpecScalar._make(F, low, num, _kmul(F, list(self.denom), list(other.denom)))

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
        F = self.F
        if self.is_zero() or other.is_zero():
            return SpecScalar.from_int(F, 0)
        num = _kmul(F, list(self.numer), list(other.numer))
        den = _kmul(F, list(self.denom), list(other.denom))
        return SpecScalar._make(F, self.low + other.low, num, den)

    __rmul__ = __mul__

    def inverse(self):
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return SpecScalar._make(self.F, -self.low, list(self.denom), list(self.numer),
                                reduce=False)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        out = SpecScalar.from_int(self.F, 1)
        for _ in range(e):
            out = out * self
        return out

    def mul_unit(self, s, e):
        """Multiply by zeta_M^s u^e."""
        F = self.F
        z = F.zeta(s)
        return SpecScalar._make(F, self.low + e, [F.mul(v, z) for v in self.numer],
                                self.denom, reduce=False)

    def as_rational(self):
        """The value as a Fraction when it is a rational constant, else None."""
        if not self.numer:
            return Fraction(0)
        if self.low != 0 or len(self.numer) != 1 or len(self.denom) != 1:
            return None
        v = self.numer[0]
        if any(v[1:]):
            return None
        return Fraction(v[0])

    def to_json(self):
        return {"M": self.F.M, "low": self.low,
                "numer": [[str(x) for x in v] for v in self.numer],
                "denom": [[str(x) for x in v] for v in self.denom]}


def _kadd(F, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, v in enumerate(b):
        out[i] = F.add(out[i], v)
    return _ktrim(F, out)


def spec_monomial(spec, a, b):
    """Image of q^a t^b as a SpecScalar."""
    s, e = spec.image_exponents(a, b)
    F = spec.field
    return SpecScalar._make(F, e, [F.powers[s]], [F.one], reduce=False)


def substitute(x, spec):
    """Image of a QtScalar on the curve; raises PoleError on a genuine pole."""
    F = spec.field
    numer, denom = x.numer, x.denom
    den_img = spec.map_poly(denom)
    if den_img.is_zero():
        numer, denom = _cancel_vanishing(numer, denom, spec)
        den_img = spec.map_poly(denom)
        if den_img.is_zero():
            raise PoleError("pole at the specialization", residual=denom,
                            witness=_classify_residual(denom, spec))
    return SpecScalar(F, spec.map_poly(numer), den_img)


def _cancel_vanishing(numer, denom, spec):
    """Divide out common factors 1 - q^(pm) t^(pn) while the denominator vanishes."""
    limit = max(denom.total_degree(), 1)
    p = 1
    while p * (spec.m + spec.n) <= limit:
        f = Poly2.binomial(p * spec.m, p * spec.n)
        progressed = False
        while f.divides(numer) and f.divides(denom):
            numer, denom = numer.exact_div(f), denom.exact_div(f)
            progressed = True
        if progressed and not spec.map_poly(denom).is_zero():
            break
        p += 1
    return numer, denom


def _classify_residual(denom, spec):
    """Whether the vanishing residual contains the binomial-type factor."""
    X = (spec.m // spec.g, spec.n // spec.g)
    phi = cyclotomic_poly(spec.g)
    f = Poly2({(X[0] * i, X[1] * i): c for i, c in enumerate(phi)})
    if f.divides(denom):
        return {"kind": "binomial", "factor": f"Phi_{spec.g}(q^{X[0]} t^{X[1]})"}
    return {"kind": "unclassified"}


def substitute_poly(p, spec):
    """Image of a Laurent polynomial in q, t (never a pole)."""
    return SpecScalar(spec.field, spec.map_poly(p))


def lift_int(spec, c):
    return SpecScalar.from_int(spec.field, c)
