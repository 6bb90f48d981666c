"""Nonsymmetric Macdonald polynomials built along the Yang-Baxter graph.

Construction works in the Laurent ring Z[q^+-1, t^+-1]: a polynomial is kept
as numerator / denominator, where the denominator is a unit times a product
of irreducible factors Phi_e(q^a t^b). Every step multiplies the
denominator by one binomial 1 - rho and then cancels whatever factors divide
all numerator coefficients.
"""
from collections import Counter
from math import gcd

from .cherednik import apply_cherednik, spectral_exponents
from .combinat import Composition
from .polyring import MacPolynomial, QtField, QtRing, apply_shift, apply_Ti
from .scalars.cyclotomic import cyclotomic_poly
from .scalars.poly2 import Poly2
from .scalars.qt import QtScalar

DEFAULT_DEGREE_CAP = 40
DEFAULT_N_CAP = 10

RING = QtRing()
FIELD = QtField()


class EigenCheckError(AssertionError):
    pass


class SpectralVector(tuple):
    """Tuple of (q exponent, t exponent) pairs."""

    def rho(self, i):
        """Exponents of zeta(i+1) / zeta(i)."""
        (a1, b1), (a2, b2) = self[i - 1], self[i]
        return a2 - a1, b2 - b1

    def to_json(self):
        return [list(e) for e in self]


def spectral_vector(alpha):
    return SpectralVector(spectral_exponents(alpha))


# -- factored denominators -------------------------------------------------

def _orient(a, b):
    """Primitive direction with a > 0, or a = 0 and b > 0; returns (a', b', g, sign)."""
    g = gcd(a, abs(b))
    a1, b1 = a // g, b // g
    if a1 < 0 or (a1 == 0 and b1 < 0):
        return -a1, -b1, g, -1
    return a1, b1, g, 1


_FACTOR_CACHE = {}


def factor_laurent(key):
    """Phi_e(q^a t^b) as a Laurent polynomial, for key = (a, b, e)."""
    f = _FACTOR_CACHE.get(key)
    if f is None:
        a, b, e = key
        f = Poly2({(a * i, b * i): c for i, c in enumerate(cyclotomic_poly(e))})
        _FACTOR_CACHE[key] = f
    return f


def binomial_factors(a, b):
    """1 - q^a t^b = sign * q^x t^y * prod Phi_e(...); returns (sign, (x, y), keys)."""
    if a == 0 and b == 0:
        raise ZeroDivisionError("1 - q^0 t^0 is zero")
    a1, b1, g, orient = _orient(a, b)
    keys = [(a1, b1, e) for e in range(1, g + 1) if g % e == 0]
    if orient > 0:
        # 1 - Y^g = -(Y^g - 1)
        return -1, (0, 0), keys
    # 1 - Y^-g = Y^-g (Y^g - 1)
    return 1, (-a1 * g, -b1 * g), keys


class Denominator:
    """sign * q^x t^y * prod key^mult."""

    __slots__ = ("sign", "mono", "factors")

    def __init__(self, sign=1, mono=(0, 0), factors=None):
        self.sign = sign
        self.mono = mono
        self.factors = Counter(factors or {})

    def times_binomial(self, a, b):
        s, (x, y), keys = binomial_factors(a, b)
        f = Counter(self.factors)
        for k in keys:
            f[k] += 1
        return Denominator(self.sign * s, (self.mono[0] + x, self.mono[1] + y), f)

    def poly(self, skip=None):
        out = Poly2.mono(self.mono[0], self.mono[1], self.sign)
        for k, e in self.factors.items():
            e -= (skip or {}).get(k, 0)
            for _ in range(e):
                out = out * factor_laurent(k)
        return out

    def copy(self):
        return Denominator(self.sign, self.mono, self.factors)

    def to_json(self):
        return {"sign": self.sign, "monomial": list(self.mono),
                "factors": [{"a": a, "b": b, "cyclotomic": e, "power": p}
                            for (a, b, e), p in sorted(self.factors.items()) if p]}


def _lines(p, a, b):
    """Group the terms of p along the direction (a, b): {class: [(k, c), ...]}."""
    lines = {}
    if a == 1:
        for (i, j), c in p.terms.items():
            cls = j - i * b
            line = lines.get(cls)
            if line is None:
                lines[cls] = [(i, c)]
            else:
                line.append((i, c))
    elif a:
        for (i, j), c in p.terms.items():
            k, i0 = divmod(i, a)
            cls = (i0, j - k * b)
            line = lines.get(cls)
            if line is None:
                lines[cls] = [(k, c)]
            else:
                line.append((k, c))
    else:
        for (i, j), c in p.terms.items():
            line = lines.get(i)
            if line is None:
                lines[i] = [(j, c)]
            else:
                line.append((j, c))
    return lines


def _point(cls, k, a, b):
    if a == 1:
        return (k, cls + k * b)
    if a:
        return (cls[0] + k * a, cls[1] + k * b)
    return (cls, k)


def divide_by_factor(p, key):
    """p / Phi_e(q^a t^b) in the Laurent ring, or None when it does not divide."""
    a, b, e = key
    lines = _lines(p, a, b)
    out = {}
    if e == 1:
        # (Y - 1) Q = R: Q_k = -(R_lo + ... + R_k), and the line sum must vanish
        for line in lines.values():
            if sum(c for _, c in line):
                return None
        for cls, line in lines.items():
            line.sort()
            run = 0
            prev = None
            for k, c in line:
                if prev is not None and run:
                    for kk in range(prev, k):
                        out[_point(cls, kk, a, b)] = -run
                run += c
                prev = k
        return Poly2._raw(out)
    phi = cyclotomic_poly(e)
    deg = len(phi) - 1
    for cls, line in lines.items():
        line.sort()
        lo, hi = line[0][0], line[-1][0]
        if hi - lo < deg:
            return None
        r = [0] * (hi - lo + 1)
        for k, c in line:
            r[k - lo] = c
        for k in range(len(r) - 1, deg - 1, -1):
            c = r[k]
            if c:
                base = k - deg
                out[_point(cls, base + lo, a, b)] = c
                for s in range(deg):
                    if phi[s]:
                        r[base + s] -= c * phi[s]
        if any(r[:deg]):
            return None
    return Poly2._raw(out)


class ScaledMacdonald:
    """Numerator (MacPolynomial over the Laurent ring) with a factored denominator."""

    __slots__ = ("alpha", "numer", "denom")

    def __init__(self, alpha, numer, denom):
        self.alpha = Composition(alpha)
        self.numer = numer
        self.denom = denom

    @property
    def N(self):
        return self.numer.N

    def leading_numer(self):
        return self.numer.coeff(self.alpha)

    def to_field(self):
        """Coefficients as reduced QtScalar."""
        out = {}
        den = self.denom
        for a, c in self.numer.terms.items():
            removed = Counter()
            for key, mult in den.factors.items():
                while removed[key] < mult:
                    d = divide_by_factor(c, key)
                    if d is None:
                        break
                    c = d
                    removed[key] += 1
            out[a] = QtScalar._trusted(c, den.poly(skip=removed))
        return MacPolynomial._raw(FIELD, self.N, out)

    def reduce_content(self, keys=None):
        """Cancel denominator factors dividing every numerator coefficient."""
        for key in list(self.denom.factors if keys is None else keys):
            while self.denom.factors.get(key, 0) > 0:
                new = _divide_numer(self.numer, key)
                if new is None:
                    break
                self.numer = new
                self.denom.factors[key] -= 1
            if self.denom.factors.get(key, 0) == 0:
                self.denom.factors.pop(key, None)
        return self


_WITNESS = {}   # key -> label whose coefficient last failed to divide


def _divide_numer(numer, key):
    """numer / Phi_e(q^a t^b) coefficientwise, or None.

    The label that blocked the previous attempt for this key is tried first,
    which makes the usual failing case cheap.
    """
    items = numer.terms
    w = _WITNESS.get(key)
    order = list(items)
    if w in items:
        order.remove(w)
        order.insert(0, w)
    new = {}
    for a in order:
        d = divide_by_factor(items[a], key)
        if d is None:
            _WITNESS[key] = a
            return None
        new[a] = d
    return MacPolynomial._raw(RING, numer.N, new)


def affine_raise(M):
    """M_{alpha Phi} = x_N (M_alpha pi), alpha Phi = (alpha_2, ..., alpha_N, alpha_1 + 1)."""
    a = tuple(M.alpha)
    new_alpha = a[1:] + (a[0] + 1,)
    numer = apply_shift(M.numer).mul_x(M.N)
    return ScaledMacdonald(new_alpha, numer, M.denom.copy())


def ring_step(M, i):
    """M_{alpha s_i} from M_alpha when alpha_i < alpha_{i+1}.

    numer' = (numer T_i)(1 - rho) + (1 - t) numer over denom (1 - rho). An
    irreducible factor of 1 - rho cancels exactly when it divides numer
    (it is coprime to 1 - t since rho has positive q-degree), so that test
    runs on the old numerator before anything is multiplied.
    """
    a = M.alpha
    if not a[i - 1] < a[i]:
        raise ValueError(f"step needs alpha_{i} < alpha_{i + 1}, got {tuple(a)}")
    ra, rb = spectral_vector(a).rho(i)
    sign, (x, y), keys = binomial_factors(ra, rb)
    base = M.numer
    kept = []
    for key in keys:
        d = None if M.denom.factors.get(key) else _divide_numer(base, key)
        if d is None:
            kept.append(key)
        else:
            base = d
    rest = Poly2.mono(x, y, sign)
    for key in kept:
        rest = rest * factor_laurent(key)
    numer = apply_Ti(M.numer, i).scale(rest) + base.scale(Poly2.binomial(0, 1))
    denom = M.denom.copy()
    denom.sign *= sign
    denom.mono = (denom.mono[0] + x, denom.mono[1] + y)
    for key in kept:
        denom.factors[key] += 1
    out = ScaledMacdonald(a.swap(i), numer, denom)
    old = [k for k in M.denom.factors if M.denom.factors[k] > 0]
    return out.reduce_content(old)


def _predecessor(alpha):
    """The graph edge used to reach alpha: ('step', i, beta) or ('affine', beta)."""
    for i in range(len(alpha) - 1):
        if alpha[i] > alpha[i + 1]:
            return "step", i + 1, alpha.swap(i + 1)
    # weakly increasing and nonzero: alpha = beta Phi
    last = alpha[-1]
    return "affine", None, Composition((last - 1,) + tuple(alpha[:-1]))


class MacdonaldBuilder:
    """Memoized construction; one builder may be shared across many labels.

    Only requested labels and weakly increasing labels are kept. Every
    rearrangement of a partition is reached through its weakly increasing
    rearrangement, so those nodes are the shared branch points; keeping the
    rest of each chain would hold several copies of the largest polynomials.
    """

    def __init__(self, degree_cap=DEFAULT_DEGREE_CAP, n_cap=DEFAULT_N_CAP):
        self.degree_cap = degree_cap
        self.n_cap = n_cap
        self.nodes = {}

    def _keep(self, alpha):
        return all(alpha[i] <= alpha[i + 1] for i in range(len(alpha) - 1))

    def scaled(self, alpha):
        alpha = Composition(alpha)
        if sum(alpha) > self.degree_cap:
            raise ValueError(f"degree {sum(alpha)} exceeds cap {self.degree_cap}")
        if len(alpha) > self.n_cap:
            raise ValueError(f"N = {len(alpha)} exceeds cap {self.n_cap}")
        if len(alpha) == 0:
            raise ValueError("need at least one variable")
        chain = []
        cur = alpha
        while cur not in self.nodes:
            if not any(cur):
                self.nodes[cur] = ScaledMacdonald(
                    cur, MacPolynomial.constant(RING, len(cur)), Denominator())
                break
            kind, i, prev = _predecessor(cur)
            chain.append((kind, i, cur))
            cur = prev
        node = self.nodes[cur]
        for kind, i, target in reversed(chain):
            node = ring_step(node, i) if kind == "step" else affine_raise(node)
            assert node.alpha == target
            if target == alpha or self._keep(target):
                self.nodes[target] = node
        return node

    def forget(self, alpha):
        self.nodes.pop(Composition(alpha), None)

    def build(self, alpha, check=True):
        M = self.scaled(alpha)
        if check:
            check_eigen_ring(M)
        return M.to_field()


_DEFAULT = None


def default_builder():
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = MacdonaldBuilder()
    return _DEFAULT


def build_macdonald(alpha, check=True, builder=None):
    """M_alpha over the rational functions in q, t.

    The eigen relation M xi_i = zeta_alpha(i) M is verified for every i unless
    check is False.
    """
    return (builder or default_builder()).build(alpha, check=check)


def build_scaled(alpha, builder=None):
    return (builder or default_builder()).scaled(alpha)


def check_eigen_ring(M):
    """Verify numer xi_i = zeta(i) numer in the Laurent ring; raise on failure."""
    z = spectral_vector(M.alpha)
    for i in range(1, M.N + 1):
        lhs = apply_cherednik(M.numer, i)
        rhs = M.numer.scale_mono(*z[i - 1])
        if lhs != rhs:
            raise EigenCheckError(f"eigen relation fails for {tuple(M.alpha)} at i={i}")
    return True


def check_denominators(P):
    """Every reduced denominator is a unit times a product of Phi_e(q^a t^b) factors.

    P is a MacPolynomial over QtField. Trial division by the factors of
    1 - q^a t^b is exhaustive because each factor is irreducible.
    """
    for c in P.terms.values():
        d = c.denom
        for key in _candidate_keys(d):
            while True:
                r = divide_by_factor(d, key)
                if r is None:
                    break
                d = r
        if len(d.terms) != 1:
            return False
    return True


def _candidate_keys(d):
    """Possible factors Phi_e(q^a t^b) of d, from its Newton polygon extent."""
    (qa, ta), (qb, tb) = d.min_exponents(), d.max_exponents()
    dq, dt = qb - qa, tb - ta
    keys = []
    for a in range(0, dq + 1):
        for b in range(-dt, dt + 1):
            if (a, b) == (0, 0) or gcd(a, abs(b)) != 1:
                continue
            if a == 0 and b < 0:
                continue
            for e in range(1, max(dq, dt) + 2):
                if (len(cyclotomic_poly(e)) - 1) * max(a, abs(b)) <= max(dq, dt):
                    keys.append((a, b, e))
    return keys


def monic_normalize(P):
    """Divide by the coefficient of the leading monomial."""
    lead, c = P.leading()
    inv = P.domain.inverse(c)
    return P.scale(inv)


def leading_scalar(P):
    return P.leading()[1]


# -- field-level steps and checkers -----------------------------------------

def _rho_scalar(domain, alpha, i):
    ra, rb = spectral_vector(alpha).rho(i)
    return domain.monomial(ra, rb)


def macdonald_step(M, alpha, i):
    """M_{alpha s_i} = M T_i + (1 - t)/(1 - rho_i) M, for alpha_i < alpha_{i+1}."""
    alpha = Composition(alpha)
    if not alpha[i - 1] < alpha[i]:
        raise ValueError(f"step needs alpha_{i} < alpha_{i + 1}")
    D = M.domain
    rho = _rho_scalar(D, alpha, i)
    one = D.one()
    if D.is_zero(one - rho):
        raise ZeroDivisionError(f"rho_{i} = 1 in the working field")
    c = (one - D.monomial(0, 1)) / (one - rho)
    return apply_Ti(M, i) + M.scale(c)


def companion_coefficients(domain, alpha, i):
    """(c_alpha, c_swapped) with M_{alpha s_i} T_i = c_alpha M_alpha + c_swapped M_{alpha s_i}."""
    rho = _rho_scalar(domain, alpha, i)
    t = domain.monomial(0, 1)
    one = domain.one()
    c_alpha = (one - rho * t) * (t - rho) / ((one - rho) * (one - rho))
    c_swapped = rho * (one - t) / (one - rho)
    return c_alpha, c_swapped


def check_companion(M_alpha, M_swapped, alpha, i):
    c_alpha, c_swapped = companion_coefficients(M_alpha.domain, alpha, i)
    lhs = apply_Ti(M_swapped, i)
    return lhs == M_alpha.scale(c_alpha) + M_swapped.scale(c_swapped)


def check_equal_entries(M, alpha, i):
    """alpha_i = alpha_{i+1} forces M T_i = t M."""
    if alpha[i - 1] != alpha[i]:
        raise ValueError("entries differ")
    return apply_Ti(M, i) == M.scale_mono(0, 1)


def to_json(P, alpha):
    out = P.to_json()
    out["alpha"] = list(alpha)
    out["spectral"] = spectral_vector(alpha).to_json()
    return out
