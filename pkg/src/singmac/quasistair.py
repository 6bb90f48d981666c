"""Quasistaircase partitions, their tableau labels, and the reduction to Theta tableaux."""
from .combinat import Composition, Partition, Tableau, inversions


class Quasistaircase:
    """The partition built from (m, n, d, K, N) together with tau, nu and the intervals I_j.

    nu has K + 2 entries nu_0 = N > nu_1 > ... > nu_{K+1} = 0, and
    I_j = [nu_j + 1, nu_{j-1}] for 1 <= j <= K + 1 (1-based positions).
    """

    def __init__(self, m, n, d, K, N):
        self.m, self.n, self.d, self.K, self.N = m, n, d, K, N
        nu_K = N - (d * n - 1) - (K - 1) * (n - 1)
        self.tau = Partition((d * n - 1,) + (n - 1,) * (K - 1) + (nu_K,))
        nu = [N, N - (d * n - 1)]
        for _ in range(K - 1):
            nu.append(nu[-1] - (n - 1))
        nu.append(0)
        self.nu = tuple(nu)
        self.intervals = tuple((nu[j] + 1, nu[j - 1]) for j in range(1, K + 2))
        lam = [0] * N
        for j in range(2, K + 2):
            lo, hi = self.intervals[j - 1]
            for i in range(lo, hi + 1):
                lam[i - 1] = (d + j - 2) * m
        self.lam = Partition(lam)

    @property
    def nu_K(self):
        return self.nu[self.K]

    def interval(self, j):
        return self.intervals[j - 1]

    def key(self):
        return (self.m, self.n, self.d, self.K, self.N)

    def __eq__(self, other):
        return isinstance(other, Quasistaircase) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return "Quasistaircase(m={}, n={}, d={}, K={}, N={})".format(*self.key())

    def to_json(self):
        return {
            "m": self.m, "n": self.n, "d": self.d, "K": self.K, "N": self.N,
            "lambda": list(self.lam), "tau": list(self.tau), "nu": list(self.nu),
            "intervals": {f"I{j}": list(iv) for j, iv in enumerate(self.intervals, start=1)},
        }


def build_quasistaircase(m, n, d, K, N):
    for name, v in (("m", m), ("d", d), ("K", K)):
        if v < 1:
            raise ValueError(f"{name} must be at least 1, got {v}")
    if not 2 <= n <= N:
        raise ValueError(f"need 2 <= n <= N, got n={n}, N={N}")
    nu_K = N - (d * n - 1) - (K - 1) * (n - 1)
    if not 1 <= nu_K <= n - 1:
        raise ValueError(f"nu_K = {nu_K} outside [1, {n - 1}] for (m,n,d,K,N)=({m},{n},{d},{K},{N})")
    return Quasistaircase(m, n, d, K, N)


def quasistaircases(max_N, max_mn):
    """Every valid (m, n, d, K, N) with N <= max_N and m*n <= max_mn, in lexicographic order."""
    out = []
    for N in range(2, max_N + 1):
        for n in range(2, N + 1):
            for m in range(1, max_mn // n + 1):
                for d in range(1, N + 1):
                    if d * n - 1 >= N:
                        break
                    for K in range(1, N + 1):
                        nu_K = N - (d * n - 1) - (K - 1) * (n - 1)
                        if nu_K < 1:
                            break
                        if nu_K <= n - 1:
                            out.append(Quasistaircase(m, n, d, K, N))
    out.sort(key=Quasistaircase.key)
    return out


def _check_shape(qs, S):
    if tuple(S.shape) != tuple(qs.tau):
        raise ValueError(f"tableau shape {tuple(S.shape)} does not match tau {tuple(qs.tau)}")


def alpha_of_tableau(qs, S):
    """Row 1 entries get 0, row r > 1 entries get (d + r - 2) m."""
    _check_shape(qs, S)
    return Composition(
        (qs.d + S.row(i) - 2) * qs.m if S.row(i) > 1 else 0
        for i in range(1, qs.N + 1))


def rank_of_label(qs, S):
    """Rank function of alpha(S), read off the tableau coordinates."""
    _check_shape(qs, S)
    tau = qs.tau
    out = []
    for i in range(1, qs.N + 1):
        r, c = S.row(i), S.col(i)
        if r > 1:
            out.append(sum(tau[r - 1:]) - c + 1)
        else:
            out.append(qs.N + 1 - c)
    return tuple(out)


def _check_V_cells(S, j, k):
    if not (S.has_cell(j, k) and S.has_cell(j + 1, k)):
        raise IndexError(f"cells ({j},{k}) and ({j + 1},{k}) are not both in shape {tuple(S.shape)}")


def has_property_V(S, j, k):
    """True when exchanging S[j,k] and S[j+1,k] gives an RSYT."""
    _check_V_cells(S, j, k)
    rows = [list(r) for r in S.rows]
    rows[j - 1][k - 1], rows[j][k - 1] = rows[j][k - 1], rows[j - 1][k - 1]
    try:
        return Tableau(rows).is_rsyt
    except ValueError:
        return False


def nu_of_shape(shape):
    """nu_0 = |shape|, nu_j = |shape| - (shape_1 + ... + shape_j)."""
    shape = tuple(Partition(shape).parts)
    nu = [sum(shape)]
    for s in shape:
        nu.append(nu[-1] - s)
    return tuple(nu)


def theta_tableau(shape, j, k):
    """Theta_{j,k} of a shape: rows other than j, j+1 as in S1, the two rows from the closed form."""
    tau = tuple(Partition(shape).parts)
    if not 1 <= j < len(tau):
        raise IndexError(f"j={j} outside 1..{len(tau) - 1}")
    if not 1 <= k <= tau[j]:
        raise IndexError(f"k={k} outside 1..{tau[j]}")
    nu = nu_of_shape(tau)
    rows = []
    v = nu[0]
    for s in tau:
        rows.append(list(range(v, v - s, -1)))
        v -= s
    top = nu[j - 1]
    low, high = rows[j - 1], rows[j]
    # left block (columns < k), row j first, then row j+1
    left = iter(range(top, top - 2 * (k - 1), -1))
    for c in range(k - 1):
        low[c] = next(left)
    for c in range(k - 1):
        high[c] = next(left)
    low[k - 1] = top + 1 - 2 * k
    high[k - 1] = top + 2 - 2 * k
    right = iter(range(top - 2 * k, nu[j + 1], -1))
    for c in range(k, len(low)):
        low[c] = next(right)
    for c in range(k, len(high)):
        high[c] = next(right)
    return Tableau(rows)


def build_theta(qs, j, k):
    return theta_tableau(qs.tau, j, k)


class ReductionStuck(RuntimeError):
    """equipolar_reduce ran out of legal steps before reaching Theta."""


def _legal_V_step(S, i, j, k):
    if not (S.row(i) < S.row(i + 1) and S.col(i) > S.col(i + 1)):
        return None
    out = S.swapped(i)
    return out if has_property_V(out, j, k) else None


def equipolar_reduce(S, j, k, max_steps=None):
    """Step indices i_1, ..., i_r taking S (with V(j,k)) to Theta_{j,k}.

    Each step exchanges i and i+1 where row[i] < row[i+1] and col[i] > col[i+1],
    so the content gap at the step is at least 2 and inv drops by one. The
    smallest admissible i that keeps V(j,k) is taken first.
    """
    if not has_property_V(S, j, k):
        raise ValueError(f"tableau lacks property V({j},{k})")
    target = theta_tableau(S.shape, j, k)
    limit = inversions(S) if max_steps is None else max_steps
    steps = []
    cur = S
    while cur != target:
        if len(steps) > limit:
            raise ReductionStuck(f"no convergence after {len(steps)} steps")
        for i in range(1, cur.size):
            nxt = _legal_V_step(cur, i, j, k)
            if nxt is not None:
                steps.append(i)
                cur = nxt
                break
        else:
            raise ReductionStuck(f"stuck at {cur!r} after {len(steps)} steps")
    return steps


def replay(S, steps):
    """The tableaux visited by applying the step indices in order (S first)."""
    out = [S]
    for i in steps:
        out.append(out[-1].swapped(i))
    return out


class ThetaLabel:
    """Theta_{j,k} of a quasistaircase with the intervals E1..E4 tiling I_j and I_{j+1}."""

    def __init__(self, qs, j, k):
        tau = qs.tau
        if not 1 <= j < len(tau):
            raise IndexError(f"j={j} outside 1..{len(tau) - 1}")
        if not 1 <= k <= tau[j]:
            raise IndexError(f"k={k} outside 1..{tau[j]}")
        self.qs, self.j, self.k = qs, j, k
        nu = qs.nu
        top = nu[j - 1]
        self.E1 = (nu[j + 1] + 1, nu[j] - k)
        self.E2 = (nu[j] - k + 1, top - 2 * k + 1)
        self.E3 = (top - 2 * k + 2, top - k + 1)
        self.E4 = (top - k + 2, top)

    @staticmethod
    def members(interval):
        lo, hi = interval
        return range(lo, hi + 1)

    def tableau(self):
        return build_theta(self.qs, self.j, self.k)

    def alpha(self):
        return alpha_of_tableau(self.qs, self.tableau())

    def mu(self):
        """alpha(Theta) / m, the (1, n) label."""
        return Composition(a // self.qs.m for a in self.alpha())

    def to_json(self):
        return {"j": self.j, "k": self.k,
                "E1": list(self.E1), "E2": list(self.E2),
                "E3": list(self.E3), "E4": list(self.E4),
                "theta": self.tableau().to_json(), "alpha": list(self.alpha())}
