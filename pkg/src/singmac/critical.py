"""(m, n)-critical pairs: the R sequence, a pruned exhaustive partner search, and closed forms."""
from .combinat import Composition, dominance_tri, rank_function

DEFAULT_BUDGET = 10 ** 7


class SearchBudgetExceeded(RuntimeError):
    def __init__(self, explored, budget):
        super().__init__(f"critical-pair search explored {explored} nodes, budget {budget}")
        self.explored = explored
        self.budget = budget


class CriticalPair:
    """alpha |> beta with beta = alpha + m p and r_alpha - r_beta = n p (common padded length)."""

    __slots__ = ("alpha", "beta", "p", "m", "n")

    def __init__(self, alpha, beta, m, n):
        L = max(len(alpha), len(beta))
        a = Composition(alpha).padded(L)
        b = Composition(beta).padded(L)
        diffs = [y - x for x, y in zip(a, b)]
        if any(d % m for d in diffs):
            raise ValueError("beta - alpha is not a multiple of m")
        self.alpha, self.beta, self.m, self.n = a, b, m, n
        self.p = tuple(d // m for d in diffs)

    def holds(self):
        """Recheck both defining equations and the order from scratch."""
        ra, rb = rank_function(self.alpha), rank_function(self.beta)
        return (dominance_tri(self.alpha, self.beta)
                and all(x - y == self.n * p for x, y, p in zip(ra, rb, self.p)))

    @property
    def length(self):
        return self.beta.length

    def __eq__(self, other):
        return isinstance(other, CriticalPair) and (self.alpha, self.beta) == (other.alpha, other.beta)

    def __hash__(self):
        return hash((self.alpha, self.beta))

    def __repr__(self):
        return f"CriticalPair({tuple(self.alpha)} -> {tuple(self.beta)}, len {self.length})"

    def to_json(self):
        return {"beta": list(self.beta[:max(self.length, 1)]), "p": list(self.p), "len": self.length}


def r_sequence(alpha, n, upto=None):
    """R(i) = r(i) + n alpha_i for i <= len(alpha), R(i) = i beyond; ranks taken at length upto."""
    alpha = Composition(alpha)
    upto = len(alpha) if upto is None else upto
    if upto < len(alpha):
        raise ValueError(f"upto={upto} is shorter than the composition")
    a = alpha.padded(upto)
    r = rank_function(a)
    return tuple(r[i] + n * a[i] for i in range(upto))


def find_critical_partners(alpha, m, n, max_len=None, budget=DEFAULT_BUDGET):
    """Every beta with length <= max_len forming an (m, n)-critical pair with alpha.

    Positions are filled left to right. At each position the admissible p_i
    keeps beta_i >= 0 and the implied rank r_alpha(i) - n p_i inside
    [1, max_len]; a choice is kept only if its implied rank is unused and is
    ordered against every earlier position exactly as beta's entries require.
    A zero entry beyond the length of alpha forces a zero tail. Survivors are
    rechecked from the definition.
    """
    alpha = Composition(alpha)
    L = len(alpha) if max_len is None else max_len
    if L < alpha.length:
        raise ValueError(f"max_len={L} is shorter than alpha's length {alpha.length}")
    a = alpha.padded(max(L, len(alpha)))[:L]
    total = sum(a)
    top = max(a) if a else 0
    ra = rank_function(a)
    la = alpha.length
    beta = [0] * L
    rank = [0] * L
    used = [False] * (L + 2)
    found = []
    explored = 0

    def ordered(i, bi, ri):
        # r(k) < r(i) exactly when beta_k > beta_i, or beta_k == beta_i with k < i
        for k in range(i):
            bk = beta[k]
            if (bk >= bi) != (rank[k] < ri):
                return False
        return True

    def finish(i, s):
        # zero tail from position i on: ranks must match r_beta of a zero entry
        for k in range(i, L):
            rk = ra[k] - n * ((0 - a[k]) // m)
            if (0 - a[k]) % m or not 1 <= rk <= L or used[rk]:
                return False
            if not ordered(k, 0, rk):
                return False
            beta[k], rank[k] = 0, rk
            used[rk] = True
        return True

    def release(i):
        for k in range(i, L):
            if rank[k]:
                used[rank[k]] = False
                rank[k] = 0
            beta[k] = 0

    def dfs(i, s):
        nonlocal explored
        explored += 1
        if explored > budget:
            raise SearchBudgetExceeded(explored, budget)
        if i == L:
            if s == total:
                b = Composition(beta)
                if b != a and dominance_tri(a, b):
                    pair = CriticalPair(a, b, m, n)
                    if pair.holds():
                        found.append(pair)
            return
        if s == total:
            if finish(i, s):
                dfs(L, s)
            release(i)
            return
        lo = max(-(a[i] // m), -((L - ra[i]) // n))     # beta_i >= 0, rank <= L
        hi = (ra[i] - 1) // n                           # rank >= 1
        for p in range(lo, hi + 1):
            bi = a[i] + m * p
            ri = ra[i] - n * p
            if bi > top or s + bi > total or used[ri]:
                continue
            if not ordered(i, bi, ri):
                continue
            beta[i], rank[i] = bi, ri
            used[ri] = True
            if bi == 0 and i >= la:
                if finish(i + 1, s):
                    dfs(L, s)
                release(i + 1)
            else:
                dfs(i + 1, s + bi)
            used[ri] = False
            beta[i], rank[i] = 0, 0

    dfs(0, 0)
    found.sort(key=lambda c: (c.length, tuple(c.beta)))
    return found


def unique_partner_formula(theta):
    """The closed-form partner of mu = alpha(Theta_{j,k}) / m, padded to length N + j.

    For j > 1: mu up to min E2, zeros on [min E2, max E3], mu_i + 1 after
    max E3 (the worked example puts max E3 in the zero block). For j = 1: the
    value d sits on E1, E4 and N + 1, zeros on E2 and E3, mu elsewhere.
    """
    qs, j = theta.qs, theta.j
    N = qs.N
    mu = list(theta.mu())
    if j > 1:
        L = N + j
        mu = mu + [0] * (L - N)
        lo2 = theta.E2[0]
        hi3 = theta.E3[1]
        beta = [mu[i - 1] if i < lo2 else 0 if i <= hi3 else mu[i - 1] + 1
                for i in range(1, L + 1)]
        return Composition(beta)
    beta = mu + [qs.d]
    for E, value in ((theta.E1, qs.d), (theta.E4, qs.d), (theta.E2, 0), (theta.E3, 0)):
        for i in range(E[0], E[1] + 1):
            beta[i - 1] = value
    return Composition(beta)
