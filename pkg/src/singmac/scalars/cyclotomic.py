"""The cyclotomic field Q(zeta_M) as Q[x]/Phi_M(x) with dense coefficient vectors."""
from fractions import Fraction
from functools import lru_cache

from . import dense


@lru_cache(maxsize=None)
def cyclotomic_poly(M):
    """Integer coefficients of Phi_M, constant term first."""
    if M < 1:
        raise ValueError("cyclotomic index must be positive")
    num = [-1] + [0] * (M - 1) + [1]
    for d in range(1, M):
        if M % d == 0:
            num = dense.u_divexact(num, list(cyclotomic_poly(d)))
    return tuple(num)


def euler_phi(M):
    return len(cyclotomic_poly(M)) - 1


class CycloField:
    """Arithmetic in Q(zeta_M). Elements are tuples of length phi(M)."""

    _cache = {}

    def __new__(cls, M):
        # one instance per M; construction is idempotent so races are harmless
        inst = cls._cache.get(M)
        if inst is None:
            inst = super().__new__(cls)
            inst._setup(M)
            cls._cache[M] = inst
        return inst

    def _setup(self, M):
        self.M = M
        self.modulus = cyclotomic_poly(M)
        self.phi = len(self.modulus) - 1
        # powers[j] = x^j mod Phi_M for 0 <= j < M
        phi = self.phi
        powers = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(M):
            powers.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for i in range(phi):
                    cur[i] -= top * self.modulus[i]
        self.powers = tuple(powers)
        self.zero = (0,) * phi
        self.one = powers[0]

    def zeta(self, s):
        return self.powers[s % self.M]

    def from_int(self, c):
        return (c,) + (0,) * (self.phi - 1)

    def is_zero(self, a):
        return not any(a)

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def scale(self, a, c):
        return tuple(x * c for x in a)

    def reduce(self, coeffs):
        """Reduce a coefficient list of any length (x^M = 1 is used first)."""
        M, phi = self.M, self.phi
        folded = [0] * M
        for j, c in enumerate(coeffs):
            if c:
                folded[j % M] += c
        out = [0] * phi
        for j, c in enumerate(folded):
            if c:
                if j < phi:
                    out[j] += c
                else:
                    for i, v in enumerate(self.powers[j]):
                        if v:
                            out[i] += c * v
        return tuple(out)

    def mul(self, a, b):
        if self.phi == 1:
            return (a[0] * b[0],)
        prod = [0] * (2 * self.phi - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] += x * y
        return self.reduce(prod)

    def inv(self, a):
        """Inverse via the extended Euclidean algorithm in Q[x]."""
        if not any(a):
            raise ZeroDivisionError("inverse of zero in cyclotomic field")
        if self.phi == 1:
            return (Fraction(1) / a[0],)
        # invariant: r_i = s_i * a (mod Phi_M)
        r0 = [Fraction(c) for c in self.modulus]
        r1 = dense.trim([Fraction(c) for c in a])
        s0, s1 = [], [Fraction(1)]
        while len(r1) > 1:
            qt, rem = _qdivmod(r0, r1)
            r0, r1 = r1, rem
            s0, s1 = s1, _qsub(s0, _qmul(qt, s1))
        c = r1[0]
        inv = [x / c for x in s1]
        return self.reduce(inv)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def normalize(self, a):
        """Convert integral Fractions to int for stable hashing and printing."""
        return tuple(int(x) if isinstance(x, Fraction) and x.denominator == 1 else x
                     for x in a)


def _qmul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return dense.trim(out)


def _qsub(a, b):
    out = list(a) + [Fraction(0)] * max(0, len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return dense.trim(out)


def _qdivmod(a, b):
    r = list(a)
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    quo = [Fraction(0)] * (len(r) - db)
    lb = b[-1]
    for k in range(len(r) - 1, db - 1, -1):
        c = r[k] / lb
        quo[k - db] = c
        if c:
            for j in range(db + 1):
                r[k - db + j] -= c * b[j]
    return dense.trim(quo), dense.trim(r[:db])
