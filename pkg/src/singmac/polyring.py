"""Sparse polynomials in x_1..x_N and the operators s_i, T_i, T_i^-1 and pi.

Operators act on the right: p T_i, p pi. The coefficient domain is a
parameter: generic rational functions, Laurent polynomials in q and t, or
their images on a specialization curve.
"""
from .combinat import Composition
from .scalars.poly2 import Poly2
from .scalars.qt import QtScalar
from .scalars.special import CycloLaurent, SpecScalar


class QtField:
    """Rational functions in q, t."""

    name = "qt"

    def zero(self):
        return QtScalar(0)

    def one(self):
        return QtScalar(1)

    def from_int(self, c):
        return QtScalar(c)

    def mul_mono(self, c, a, b):
        return c.mul_monomial(a, b)

    def monomial(self, a, b):
        return QtScalar.monomial(a, b)

    def is_zero(self, c):
        return c.is_zero()

    def inverse(self, c):
        return c.inverse()

    def to_json(self, c):
        return c.to_json()

    def __eq__(self, other):
        return isinstance(other, QtField)

    def __hash__(self):
        return hash("qt-field")


class QtRing(QtField):
    """Laurent polynomials in q, t with integer coefficients."""

    name = "qt-ring"

    def zero(self):
        return Poly2()

    def one(self):
        return Poly2.const(1)

    def from_int(self, c):
        return Poly2.const(c)

    def mul_mono(self, c, a, b):
        return c.shift(a, b)

    def monomial(self, a, b):
        return Poly2.mono(a, b)

    def inverse(self, c):
        raise ArithmeticError("no division in the Laurent ring")

    def to_json(self, c):
        return c.to_json()

    def __eq__(self, other):
        return isinstance(other, QtRing)

    def __hash__(self):
        return hash("qt-ring")


class SpecField:
    """The field Q(zeta_M)(u) attached to a specialization."""

    name = "spec"

    def __init__(self, spec):
        self.spec = spec
        self.F = spec.field

    def zero(self):
        return SpecScalar.from_int(self.F, 0)

    def one(self):
        return SpecScalar.from_int(self.F, 1)

    def from_int(self, c):
        return SpecScalar.from_int(self.F, c)

    def mul_mono(self, c, a, b):
        s, e = self.spec.image_exponents(a, b)
        return c.mul_unit(s, e)

    def monomial(self, a, b):
        return self.mul_mono(self.one(), a, b)

    def is_zero(self, c):
        return c.is_zero()

    def inverse(self, c):
        return c.inverse()

    def to_json(self, c):
        return c.to_json()

    def __eq__(self, other):
        return type(other) is type(self) and other.spec == self.spec

    def __hash__(self):
        return hash((self.name, self.spec))


class SpecRing(SpecField):
    """Laurent polynomials in u over Z[zeta_M] (kept reduced mod Phi_M)."""

    name = "spec-ring"

    def zero(self):
        return CycloLaurent._raw(self.F, {})

    def one(self):
        return CycloLaurent.const(self.F, 1)

    def from_int(self, c):
        return CycloLaurent.const(self.F, c)

    def inverse(self, c):
        raise ArithmeticError("no division in the Laurent ring")


class MacPolynomial:
    """Sparse map Composition -> scalar with a common number of variables N."""

    __slots__ = ("domain", "N", "terms")

    def __init__(self, domain, N, terms=None):
        self.domain = domain
        self.N = N
        self.terms = {}
        if terms:
            for a, c in terms.items():
                if len(a) != N:
                    raise ValueError(f"exponent {a} does not have {N} entries")
                if not domain.is_zero(c):
                    self.terms[tuple(a)] = c

    @classmethod
    def _raw(cls, domain, N, terms):
        p = cls.__new__(cls)
        p.domain = domain
        p.N = N
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, domain, alpha, coeff=None):
        alpha = tuple(alpha)
        c = domain.one() if coeff is None else coeff
        return cls(domain, len(alpha), {alpha: c})

    @classmethod
    def constant(cls, domain, N, c=1):
        return cls(domain, N, {(0,) * N: domain.from_int(c)})

    def is_zero(self):
        return not self.terms

    def __len__(self):
        return len(self.terms)

    def coeff(self, alpha):
        return self.terms.get(tuple(alpha), self.domain.zero())

    @property
    def degree(self):
        """Common degree when homogeneous, else None."""
        degs = {sum(a) for a in self.terms}
        if len(degs) == 1:
            return degs.pop()
        return 0 if not degs else None

    def __eq__(self, other):
        if not isinstance(other, MacPolynomial):
            return NotImplemented
        return self.N == other.N and self.terms == other.terms

    def __repr__(self):
        items = sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)
        body = ", ".join(f"{a}: {c!r}" for a, c in items[:6])
        more = "" if len(items) <= 6 else f", ... ({len(items)} terms)"
        return f"MacPolynomial(N={self.N}, {{{body}{more}}})"

    def __add__(self, other):
        out = dict(self.terms)
        _accumulate_all(self.domain, out, other.terms)
        return MacPolynomial._raw(self.domain, self.N, _drop_zeros(self.domain, out))

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        return MacPolynomial._raw(self.domain, self.N, {a: -c for a, c in self.terms.items()})

    def scale(self, c):
        if self.domain.is_zero(c):
            return MacPolynomial._raw(self.domain, self.N, {})
        out = {a: v * c for a, v in self.terms.items()}
        return MacPolynomial._raw(self.domain, self.N, _drop_zeros(self.domain, out))

    def scale_mono(self, a, b):
        """Multiply every coefficient by q^a t^b."""
        D = self.domain
        return MacPolynomial._raw(D, self.N, {k: D.mul_mono(c, a, b) for k, c in self.terms.items()})

    def map_coeffs(self, domain, fn):
        out = {}
        for a, c in self.terms.items():
            v = fn(c)
            if not domain.is_zero(v):
                out[a] = v
        return MacPolynomial._raw(domain, self.N, out)

    def leading(self):
        """(alpha, coeff) for the term maximal in the refined dominance order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        a = max(self.terms, key=_order_key)
        return Composition(a), self.terms[a]

    def mul_x(self, i):
        """Multiply by x_i."""
        out = {}
        for a, c in self.terms.items():
            b = list(a)
            b[i - 1] += 1
            out[tuple(b)] = c
        return MacPolynomial._raw(self.domain, self.N, out)

    def div_x(self, i):
        """Exact division by x_i."""
        out = {}
        for a, c in self.terms.items():
            if a[i - 1] == 0:
                raise ArithmeticError(f"x_{i} does not divide the term {a}")
            b = list(a)
            b[i - 1] -= 1
            out[tuple(b)] = c
        return MacPolynomial._raw(self.domain, self.N, out)

    def to_json(self):
        items = sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)
        return {"N": self.N,
                "terms": [{"alpha": list(a), "coeff": self.domain.to_json(c)}
                          for a, c in items]}


def _order_key(a):
    return (sum(a), tuple(sorted(a, reverse=True)), tuple(a))


def _accumulate_all(domain, out, terms):
    for a, c in terms.items():
        cur = out.get(a)
        out[a] = c if cur is None else cur + c


def _drop_zeros(domain, out):
    return {a: c for a, c in out.items() if not domain.is_zero(c)}


def _check_index(p, i, top=None):
    top = p.N - 1 if top is None else top
    if not 1 <= i <= top:
        raise IndexError(f"operator index {i} out of range 1..{top}")


def apply_si(p, i):
    _check_index(p, i)
    out = {}
    for a, c in p.terms.items():
        b = list(a)
        b[i - 1], b[i] = b[i], b[i - 1]
        out[tuple(b)] = c
    return MacPolynomial._raw(p.domain, p.N, out)


def apply_Ti(p, i):
    """p T_i = (1-t) x_{i+1} (p - p s_i)/(x_i - x_{i+1}) + t p s_i, termwise."""
    _check_index(p, i)
    D = p.domain
    out = {}
    get = out.get
    k0, k1 = i - 1, i
    for alpha, c in p.terms.items():
        a, b = alpha[k0], alpha[k1]
        tc = D.mul_mono(c, 0, 1)
        if a == b:
            cur = get(alpha)
            out[alpha] = tc if cur is None else cur + tc
            continue
        head, tail = alpha[:k0], alpha[k1 + 1:]
        sw = head + (b, a) + tail
        if a > b:
            cur = get(sw)
            out[sw] = c if cur is None else cur + c
            if a - b >= 2:
                w = c - tc
                for j in range(b + 1, a):
                    key = head + (a + b - j, j) + tail
                    cur = get(key)
                    out[key] = w if cur is None else cur + w
        else:
            cur = get(sw)
            out[sw] = tc if cur is None else cur + tc
            w = tc - c
            cur = get(alpha)
            out[alpha] = w if cur is None else cur + w
            for j in range(a + 1, b):
                key = head + (a + b - j, j) + tail
                cur = get(key)
                out[key] = w if cur is None else cur + w
    return MacPolynomial._raw(D, p.N, _drop_zeros(D, out))


def apply_Ti_inv(p, i):
    """p T_i^-1 = (p T_i + (1-t) p) / t."""
    q = apply_Ti(p, i) + p - p.scale_mono(0, 1)
    return q.scale_mono(0, -1)


def apply_shift(p):
    """p pi (x) = p(q x_N, x_1, ..., x_{N-1}): rotate exponents, weight by q^(alpha_1)."""
    D = p.domain
    out = {}
    for a, c in p.terms.items():
        out[a[1:] + a[:1]] = D.mul_mono(c, a[0], 0) if a[0] else c
    return MacPolynomial._raw(D, p.N, out)
