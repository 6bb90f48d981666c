"""Cherednik, Dunkl and Jucys-Murphy operators as words, and the projection operator.

An OperatorExpr is a sequence of factors; each factor is a linear
combination of words. Evaluation feeds the polynomial through the factors in
order, and through each word letter by letter (right action: p T_1 T_2 means
apply T_1 first).
"""
from .combinat import Composition, compositions, dominance_tri, rank_function
from .polyring import MacPolynomial, apply_shift, apply_Ti, apply_Ti_inv


class CriticalPairObstruction(ValueError):
    """No index separates the spectral vectors of alpha and beta on the curve."""

    def __init__(self, alpha, beta):
        super().__init__(f"critical pair obstruction: {tuple(alpha)} vs {tuple(beta)}")
        self.alpha = alpha
        self.beta = beta


def _apply_letter(p, letter):
    kind = letter[0]
    if kind == "T":
        return apply_Ti(p, letter[1])
    if kind == "Tinv":
        return apply_Ti_inv(p, letter[1])
    if kind == "pi":
        return apply_shift(p)
    if kind == "x":
        return p.mul_x(letter[1])
    if kind == "xinv":
        return p.div_x(letter[1])
    if kind == "mono":
        return p.scale_mono(letter[1], letter[2])
    raise ValueError(f"unknown operator letter {letter!r}")


class OperatorExpr:
    """Product of factors, each a sum of (int coefficient, word) pairs.

    Letters: ("T", i), ("Tinv", i), ("pi",), ("x", i), ("xinv", i) for exact
    division, ("mono", a, b) for multiplication by q^a t^b.
    """

    def __init__(self, factors, N):
        self.N = N
        self.factors = []
        for f in factors:
            terms = []
            for c, word in f:
                word = tuple(tuple(x) for x in word)
                for letter in word:
                    self._check(letter)
                terms.append((int(c), word))
            self.factors.append(tuple(terms))
        self.factors = tuple(self.factors)

    def _check(self, letter):
        kind = letter[0]
        if kind in ("T", "Tinv") and not 1 <= letter[1] <= self.N - 1:
            raise IndexError(f"{kind}_{letter[1]} out of range for N={self.N}")
        if kind in ("x", "xinv") and not 1 <= letter[1] <= self.N:
            raise IndexError(f"x_{letter[1]} out of range for N={self.N}")

    @classmethod
    def word(cls, letters, N):
        return cls([[(1, letters)]], N)

    def then(self, other):
        """The operator p -> (p self) other."""
        if other.N != self.N:
            raise ValueError("variable counts differ")
        return OperatorExpr(list(self.factors) + list(other.factors), self.N)

    def degree_shift(self):
        """Net change in degree (x letters raise, xinv letters lower)."""
        total = 0
        for f in self.factors:
            shifts = {sum(1 if l[0] == "x" else -1 if l[0] == "xinv" else 0 for l in w)
                      for _, w in f}
            if len(shifts) != 1:
                raise ValueError("factor mixes degree shifts")
            total += shifts.pop()
        return total

    def apply(self, p):
        if p.N != self.N:
            raise ValueError(f"operator on {self.N} variables applied to N={p.N}")
        for f in self.factors:
            acc = None
            for c, word in f:
                r = p
                for letter in word:
                    r = _apply_letter(r, letter)
                if c != 1:
                    r = r.scale(p.domain.from_int(c))
                acc = r if acc is None else acc + r
            p = acc
        return p

    def __repr__(self):
        return f"OperatorExpr(N={self.N}, factors={len(self.factors)})"


def cherednik_word(i, N):
    """xi_i = t^(i-1) T_{i-1}^-1 ... T_1^-1 pi T_{N-1} ... T_i."""
    if not 1 <= i <= N:
        raise IndexError(f"xi_{i} out of range for N={N}")
    letters = [("mono", 0, i - 1)]
    letters += [("Tinv", j) for j in range(i - 1, 0, -1)]
    letters.append(("pi",))
    letters += [("T", j) for j in range(N - 1, i - 1, -1)]
    return OperatorExpr.word(letters, N)


def jucys_murphy_word(i, N):
    """phi_i = t^-(N-i) T_i ... T_{N-1} T_{N-1} ... T_i (phi_N = 1)."""
    if not 1 <= i <= N:
        raise IndexError(f"phi_{i} out of range for N={N}")
    up = [("T", j) for j in range(i, N)]
    letters = up + up[::-1] + [("mono", 0, -(N - i))]
    return OperatorExpr.word(letters, N)


def dunkl_expr(i, N):
    """D_N = (1 - xi_N) then divide by x_N; D_i = t^-1 T_i D_{i+1} T_i."""
    if not 1 <= i <= N:
        raise IndexError(f"D_{i} out of range for N={N}")
    up = [("T", j) for j in range(i, N)]
    xi_N = cherednik_word(N, N).factors[0][0][1]
    factors = [
        [(1, up)],
        [(1, ()), (-1, xi_N)],
        [(1, [("xinv", N)] + up[::-1] + [("mono", 0, -(N - i))])],
    ]
    return OperatorExpr(factors, N)


def apply_cherednik(p, i):
    return cherednik_word(i, p.N).apply(p)


def apply_jucys_poly(p, i):
    return jucys_murphy_word(i, p.N).apply(p)


def apply_dunkl(p, i):
    if p.degree is None:
        raise ValueError("Dunkl operators need a homogeneous polynomial")
    if p.is_zero() or p.degree == 0:
        return MacPolynomial(p.domain, p.N)
    try:
        return dunkl_expr(i, p.N).apply(p)
    except ArithmeticError as exc:
        raise AssertionError(f"inexact division by x_N in D_{i}: {exc}") from exc


def spectral_exponents(alpha):
    """(q, t) exponents of zeta_alpha(i) = q^alpha_i t^(N - r_alpha(i))."""
    N = len(alpha)
    r = rank_function(alpha)
    return tuple((alpha[i], N - r[i]) for i in range(N))


class ProjectionOperator:
    """prod over beta below alpha of (xi_i - zeta_beta(i)) / (zeta_alpha(i) - zeta_beta(i)).

    Factors are deduplicated by (i, generic exponent of zeta_beta(i)); the
    index i is the smallest one separating alpha from beta on the curve.
    """

    def __init__(self, alpha, spec, factors, separated):
        self.alpha = Composition(alpha)
        self.spec = spec
        self.factors = tuple(factors)     # (i, (a, b)) for zeta_beta(i) = q^a t^b
        self.separated = separated        # number of beta handled

    def as_expr(self):
        """The numerator product as an OperatorExpr (no scalar normalization)."""
        N = len(self.alpha)
        out = []
        for i, (a, b) in self.factors:
            out.append([(1, cherednik_word(i, N).factors[0][0][1]), (-1, [("mono", a, b)])])
        return OperatorExpr(out, N)

    def normalizer_factors(self, domain):
        """The factors zeta_alpha(i) - zeta_beta(i), one per entry of self.factors."""
        z = spectral_exponents(self.alpha)
        return [domain.monomial(*z[i - 1]) - domain.monomial(a, b) for i, (a, b) in self.factors]

    def normalizer(self, domain):
        """prod of (zeta_alpha(i) - zeta_beta(i)) in the given domain."""
        out = domain.one()
        for f in self.normalizer_factors(domain):
            out = out * f
        return out

    def apply(self, p):
        """p times the numerator product (no normalization)."""
        for i, (a, b) in self.factors:
            p = apply_cherednik(p, i) - p.scale_mono(a, b)
        return p


def projection_operator(alpha, spec, cap=20000):
    alpha = Composition(alpha)
    N = len(alpha)
    za = spectral_exponents(alpha)
    img_a = [spec.image_exponents(*e) for e in za]
    factors = []
    seen = set()
    count = 0
    for beta in compositions(sum(alpha), N):
        if not dominance_tri(alpha, beta):
            continue
        count += 1
        if count > cap:
            raise ValueError(f"more than {cap} labels below {tuple(alpha)}")
        zb = spectral_exponents(beta)
        for i in range(N):
            if spec.image_exponents(*zb[i]) != img_a[i]:
                key = (i + 1, zb[i])
                if key not in seen:
                    seen.add(key)
                    factors.append(key)
                break
        else:
            raise CriticalPairObstruction(alpha, beta)
    return ProjectionOperator(alpha, spec, factors, count)
