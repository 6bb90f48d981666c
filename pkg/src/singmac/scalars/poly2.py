"""Sparse Laurent polynomials in q and t with integer coefficients."""
from math import gcd

from . import dense


class Poly2:
    """Element of Z[q, 1/q, t, 1/t] stored as {(eq, et): int} with no zeros."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: v for k, v in terms.items() if v}

    @classmethod
    def _raw(cls, terms):
        p = cls.__new__(cls)
        p.terms = terms
        return p

    @classmethod
    def const(cls, c):
        return cls._raw({(0, 0): c} if c else {})

    @classmethod
    def mono(cls, a, b, c=1):
        return cls._raw({(a, b): c} if c else {})

    @classmethod
    def binomial(cls, a, b):
        """1 - q^a t^b."""
        if (a, b) == (0, 0):
            return cls._raw({})
        return cls._raw({(0, 0): 1, (a, b): -1})

    def is_zero(self):
        return not self.terms

    __bool__ = lambda self: bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Poly2.const(other)
        return isinstance(other, Poly2) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self.terms.items(), reverse=True):
            mono = "".join(
                s if e == 1 else f"{s}^{e}" for s, e in (("q", a), ("t", b)) if e
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __neg__(self):
        return Poly2._raw({k: -v for k, v in self.terms.items()})

    def __add__(self, other):
        if isinstance(other, int):
            other = Poly2.const(other)
        if len(self.terms) < len(other.terms):
            big, small = other.terms, self.terms
        else:
            big, small = self.terms, other.terms
        out = dict(big)
        for k, v in small.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                del out[k]
        return Poly2._raw(out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            other = Poly2.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) - v
            if w:
                out[k] = w
            else:
                del out[k]
        return Poly2._raw(out)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return Poly2._raw({})
            return Poly2._raw({k: v * other for k, v in self.terms.items()})
        a, b = self.terms, other.terms
        if len(a) < len(b):
            a, b = b, a
        if len(b) == 1:
            ((e1, e2), c), = b.items()
            return Poly2._raw({(x + e1, y + e2): v * c for (x, y), v in a.items()})
        if len(b) == 2:
            ((e1, e2), c), ((f1, f2), d) = b.items()
            out = {(x + e1, y + e2): v * c for (x, y), v in a.items()}
            for (x, y), v in a.items():
                k = (x + f1, y + f2)
                w = out.get(k, 0) + v * d
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
            return Poly2._raw(out)
        out = {}
        for (x2, y2), c2 in b.items():
            for (x1, y1), c1 in a.items():
                k = (x1 + x2, y1 + y2)
                out[k] = out.get(k, 0) + c1 * c2
        return Poly2._raw({k: v for k, v in out.items() if v})

    __rmul__ = __mul__

    def __pow__(self, e):
        out = Poly2.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def shift(self, a, b):
        """Multiply by q^a t^b."""
        if a == 0 and b == 0:
            return self
        return Poly2._raw({(x + a, y + b): v for (x, y), v in self.terms.items()})

    def min_exponents(self):
        if not self.terms:
            return (0, 0)
        return (min(k[0] for k in self.terms), min(k[1] for k in self.terms))

    def max_exponents(self):
        if not self.terms:
            return (0, 0)
        return (max(k[0] for k in self.terms), max(k[1] for k in self.terms))

    def is_polynomial(self):
        a, b = self.min_exponents()
        return a >= 0 and b >= 0

    def content(self):
        g = 0
        for v in self.terms.values():
            g = gcd(g, v)
            if g == 1:
                break
        return g

    def leading_term(self):
        """Graded-lex leading (exponent, coefficient), q before t."""
        k = max(self.terms, key=lambda e: (e[0] + e[1], e[0], e[1]))
        return k, self.terms[k]

    def divide_int(self, c):
        return Poly2._raw({k: v // c for k, v in self.terms.items()})

    def total_degree(self):
        return max((a + b for a, b in self.terms), default=0)

    def is_constant(self):
        return not self.terms or set(self.terms) == {(0, 0)}

    def constant_value(self):
        return self.terms.get((0, 0), 0)

    def substitute_t_inverse(self):
        return Poly2._raw({(a, -b): v for (a, b), v in self.terms.items()})

    # dense conversions, only for polynomials with nonnegative exponents

    def to_dense(self):
        """List over t of lists over q."""
        if not self.terms:
            return []
        dt = max(b for _, b in self.terms)
        dq = max(a for a, _ in self.terms)
        rows = [[0] * (dq + 1) for _ in range(dt + 1)]
        for (a, b), v in self.terms.items():
            rows[b][a] = v
        return [dense.trim(r) for r in rows]

    @classmethod
    def from_dense(cls, rows):
        out = {}
        for b, row in enumerate(rows):
            for a, v in enumerate(row):
                if v:
                    out[(a, b)] = v
        return cls._raw(out)

    def exact_div(self, other):
        """Quotient in the Laurent ring; ValueError if other does not divide self."""
        if not other.terms:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.terms:
            return Poly2._raw({})
        if len(other.terms) == 1:
            ((a, b), c), = other.terms.items()
            out = {}
            for (x, y), v in self.terms.items():
                qv, r = divmod(v, c)
                if r:
                    raise ValueError("inexact division")
                out[(x - a, y - b)] = qv
            return Poly2._raw(out)
        sa, sb = self.min_exponents()
        oa, ob = other.min_exponents()
        num = self.shift(-sa, -sb).to_dense()
        den = other.shift(-oa, -ob).to_dense()
        quo = b_divexact(num, den)
        return Poly2.from_dense(quo).shift(sa - oa, sb - ob)

    def divides(self, other):
        """True when self divides other in the Laurent ring."""
        try:
            other.exact_div(self)
        except ValueError:
            return False
        return True

    def to_json(self):
        return [[a, b, str(v)] for (a, b), v in sorted(self.terms.items())]

    @classmethod
    def from_json(cls, data):
        return cls({(int(a), int(b)): int(c) for a, b, c in data})


def b_divexact(a, b):
    """Exact division of dense bivariate polynomials (lists over t of lists over q)."""
    db = len(b) - 1
    lb = b[-1]
    r = [list(x) for x in a]
    if len(r) - 1 < db:
        if r:
            raise ValueError("inexact division")
        return []
    quo = [[] for _ in range(len(r) - db)]
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k]
        if not c:
            continue
        qc = dense.u_divexact(c, lb)
        quo[k - db] = qc
        for j in range(db + 1):
            if b[j]:
                r[k - db + j] = dense.u_sub(r[k - db + j], dense.u_mul(qc, b[j]))
    if any(r[:db]):
        raise ValueError("inexact division")
    return dense.b_trim(quo)


def poly_gcd(a, b):
    """Gcd of two polynomials (nonnegative exponents) in Z[q,t].

    The result is primitive over Z[q] in the t-direction and carries the
    integer content gcd; sign is not normalized.
    """
    if not a.terms:
        return b
    if not b.terms:
        return a
    return Poly2.from_dense(dense.b_gcd(a.to_dense(), b.to_dense()))
