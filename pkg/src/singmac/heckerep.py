"""The Hecke algebra module spanned by the RSYT of a fixed shape."""
from .combinat import content_vector
from .scalars.qt import QtScalar


def _t(d):
    return QtScalar.monomial(0, d)


def step_coefficients(d):
    """Coefficients of tau(T_i) for content gap d = CT[i] - CT[i+1], |d| >= 2.

    Returns (off, diag): S tau(T_i) = off * S' + diag * S where S' is S with
    i, i+1 exchanged.
    """
    t = _t(1)
    one = QtScalar(1)
    if d >= 2:
        return one, (t - 1) / (1 - _t(-d))
    if d <= -2:
        off = t * (_t(d + 1) - 1) * (_t(d - 1) - 1) / (_t(d) - 1) ** 2
        diag = _t(d) * (t - 1) / (_t(d) - 1)
        return off, diag
    raise ValueError(f"content gap {d} has no step coefficients")


class ModuleVector:
    """Sparse combination of same-shape RSYT with QtScalar coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        shape = None
        for S, c in (terms or {}).items():
            if not S.is_rsyt:
                raise ValueError("module vectors are indexed by RSYT")
            if shape is None:
                shape = S.shape
            elif S.shape != shape:
                raise ValueError("mixed shapes in module vector")
            if not c.is_zero():
                self.terms[S] = c

    @classmethod
    def basis(cls, S):
        return cls({S: QtScalar(1)})

    def __add__(self, other):
        out = dict(self.terms)
        for S, c in other.terms.items():
            out[S] = out[S] + c if S in out else c
        return ModuleVector(out)

    def __sub__(self, other):
        return self + other.scale(QtScalar(-1))

    def scale(self, c):
        return ModuleVector({S: v * c for S, v in self.terms.items()})

    def coeff(self, S):
        return self.terms.get(S, QtScalar(0))

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, ModuleVector) and self.terms == other.terms

    def __repr__(self):
        return f"ModuleVector({self.terms!r})"


def tau_action(v, i):
    """v tau(T_i), extended linearly from the four basis cases."""
    out = {}

    def add(S, c):
        out[S] = out[S] + c if S in out else c

    for S, c in v.terms.items():
        if not 1 <= i < S.size:
            raise IndexError(f"index {i} out of range 1..{S.size - 1}")
        if S.row(i) == S.row(i + 1):
            add(S, c * _t(1))
            continue
        if S.col(i) == S.col(i + 1):
            add(S, -c)
            continue
        d = S.content(i) - S.content(i + 1)
        # different row and column forces |d| >= 2
        assert abs(d) >= 2, f"content gap {d} between separated cells"
        off, diag = step_coefficients(d)
        add(S.swapped(i), c * off)
        add(S, c * diag)
    return ModuleVector(out)


def tau_action_inverse(v, i):
    """v tau(T_i)^-1 = (v tau(T_i) + (1 - t) v) / t."""
    t = _t(1)
    return (tau_action(v, i) + v.scale(1 - t)).scale(_t(-1))


def jucys_murphy_action(v, i):
    """v tau(phi_i) with phi_N = 1 and phi_i = (1/t) T_i phi_{i+1} T_i."""
    n = next(iter(v.terms)).size if v.terms else i
    if not 1 <= i <= n:
        raise IndexError(f"index {i} out of range 1..{n}")
    if i == n:
        return v
    w = tau_action(v, i)
    w = jucys_murphy_action(w, i + 1)
    w = tau_action(w, i)
    return w.scale(_t(-1))


def jucys_murphy_eigen(S, i):
    """The eigenvalue t^CT[i] of phi_i on S."""
    return _t(S.content(i))


def check_jucys_murphy(S, i):
    """Recompute S phi_i from the recursion; True when it equals t^CT[i] S."""
    v = ModuleVector.basis(S)
    return jucys_murphy_action(v, i) == v.scale(jucys_murphy_eigen(S, i))


def gamma_norm(S):
    """Product over i < j with c = CT[j] - CT[i] >= 2 of (1-t^(c-1))(1-t^(c+1))/(1-t^c)^2."""
    ct = content_vector(S)
    out = QtScalar(1)
    n = len(ct)
    for i in range(n):
        for j in range(i + 1, n):
            c = ct[j] - ct[i]
            if c >= 2:
                out = out * (1 - _t(c - 1)) * (1 - _t(c + 1)) / (1 - _t(c)) ** 2
    return out


def inner_product(v, w):
    """<v, w> with <S, S'> = delta(S, S') gamma(S)."""
    out = QtScalar(0)
    for S, c in v.terms.items():
        if S in w.terms:
            out = out + c * w.terms[S] * gamma_norm(S)
    return out
