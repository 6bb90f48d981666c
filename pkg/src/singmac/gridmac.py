"""Nonsymmetric Macdonald polynomials on integer grids (the array twin of MacdonaldBuilder).

Same construction as macdonald.ring_step / affine_raise: numerators in the
Laurent ring with a factored Denominator, new binomial factors pre-divided
from the old numerator, old factors cancelled after each step. Results
convert to ScaledMacdonald and specialize without leaving the grid form.
"""
from math import gcd

import numpy as np

from .combinat import Composition
from .gridpoly import GridPoly, QtGrid, SpecGrid
from .macdonald import (DEFAULT_DEGREE_CAP, DEFAULT_N_CAP, Denominator, ScaledMacdonald,
                        _predecessor, binomial_factors, factor_laurent, spectral_vector)
from .scalars.poly2 import Poly2
from .scalars.special import CycloLaurent

QT = QtGrid()


class GridScaled:
    """numer (GridPoly over QtGrid) / denom (Denominator) for the label alpha."""

    __slots__ = ("alpha", "numer", "denom")

    def __init__(self, alpha, numer, denom):
        self.alpha = Composition(alpha)
        self.numer = numer
        self.denom = denom

    @property
    def N(self):
        return self.numer.N

    def to_scaled(self):
        return ScaledMacdonald(self.alpha, self.numer.to_mac(), self.denom.copy())

    def vanishing_factors(self, spec):
        """Denominator factors Phi_e(q^a t^b) that vanish identically on the curve."""
        return [key for key, mult in self.denom.factors.items()
                if mult > 0 and factor_vanishes(key, spec)]

    def specialize(self, spec_ring):
        """(numerator, denominator) images, or raise SpecializationPole."""
        bad = self.vanishing_factors(spec_ring.spec)
        if bad:
            key = bad[0]
            row = self.numer.failing_row(key)
            label = None if row is None else tuple(self.numer.basis.labels[row])
            raise SpecializationPole(self.alpha, key, label)
        return self.numer.specialize(spec_ring), specialize_denominator(self.denom, spec_ring.spec)


class SpecializationPole(ArithmeticError):
    """A factor Phi_e(q^a t^b) left in the denominator vanishes on the curve."""

    def __init__(self, alpha, key, label):
        a, b, e = key
        super().__init__(f"M_{tuple(alpha)} has a pole: Phi_{e}(q^{a} t^{b}) stays in the "
                         f"denominator of the coefficient of x^{label}")
        self.alpha, self.key, self.label = tuple(alpha), key, label

    def witness(self):
        a, b, e = self.key
        return {"label": list(self.alpha), "coefficient": list(self.label) if self.label else None,
                "factor": {"a": a, "b": b, "cyclotomic": e}}


def factor_vanishes(key, spec):
    """Phi_e(q^a t^b) is identically zero on the curve."""
    a, b, e = key
    s, u = spec.image_exponents(a, b)
    return u == 0 and spec.M // gcd(s, spec.M) == e


def specialize_denominator(denom, spec):
    F = spec.field
    out = CycloLaurent.const(F, denom.sign).mul_unit(*spec.image_exponents(*denom.mono))
    for key, mult in sorted(denom.factors.items()):
        img = spec.map_poly(factor_laurent(key))
        for _ in range(mult):
            out = out * img
    return out


_WITNESS = {}   # key -> row that last failed to divide


def _divide(numer, key):
    w = _WITNESS.get(key)
    if w is not None and w < numer.arr.shape[0] and numer.arr[w].any():
        if numer.divide_factor(key, rows=[w]) is None:
            return None
    out = numer.divide_factor(key)
    if out is None:
        row = numer.failing_row(key)
        if row is not None:
            _WITNESS[key] = row
    return out


def reduce_content(M, keys):
    for key in keys:
        while M.denom.factors.get(key, 0) > 0:
            new = _divide(M.numer, key)
            if new is None:
                break
            M.numer = new
            M.denom.factors[key] -= 1
        if M.denom.factors.get(key, 0) == 0:
            M.denom.factors.pop(key, None)
    return M


def grid_affine_raise(M):
    a = tuple(M.alpha)
    numer = M.numer.apply_pi().mul_x(M.N)
    return GridScaled(a[1:] + (a[0] + 1,), numer, M.denom.copy())


def grid_ring_step(M, i):
    """Grid version of macdonald.ring_step."""
    a = M.alpha
    if not a[i - 1] < a[i]:
        raise ValueError(f"step needs alpha_{i} < alpha_{i + 1}, got {tuple(a)}")
    ra, rb = spectral_vector(a).rho(i)
    sign, (x, y), keys = binomial_factors(ra, rb)
    base = M.numer
    kept = []
    for key in keys:
        d = None if M.denom.factors.get(key) else _divide(base, key)
        if d is None:
            kept.append(key)
        else:
            base = d
    rest = Poly2.mono(x, y, sign)
    for key in kept:
        rest = rest * factor_laurent(key)
    numer = M.numer.apply_T(i).scale_laurent(rest) + base.scale_laurent(Poly2.binomial(0, 1))
    denom = M.denom.copy()
    denom.sign *= sign
    denom.mono = (denom.mono[0] + x, denom.mono[1] + y)
    for key in kept:
        denom.factors[key] += 1
    old = [k for k in M.denom.factors if M.denom.factors[k] > 0]
    return reduce_content(GridScaled(a.swap(i), numer, denom), old)


class GridBuilder:
    """Memoized grid construction with the same memo policy as MacdonaldBuilder."""

    def __init__(self, degree_cap=DEFAULT_DEGREE_CAP, n_cap=DEFAULT_N_CAP):
        self.degree_cap = degree_cap
        self.n_cap = n_cap
        self.nodes = {}

    @staticmethod
    def _keep(alpha):
        return all(alpha[i] <= alpha[i + 1] for i in range(len(alpha) - 1))

    def scaled(self, alpha):
        alpha = Composition(alpha)
        if sum(alpha) > self.degree_cap:
            raise ValueError(f"degree {sum(alpha)} exceeds cap {self.degree_cap}")
        if not 1 <= len(alpha) <= self.n_cap:
            raise ValueError(f"N = {len(alpha)} outside 1..{self.n_cap}")
        chain = []
        cur = alpha
        while cur not in self.nodes:
            if not any(cur):
                self.nodes[cur] = GridScaled(cur, GridPoly.one(QT, len(cur)), Denominator())
                break
            kind, i, prev = _predecessor(cur)
            chain.append((kind, i, cur))
            cur = prev
        node = self.nodes[cur]
        for kind, i, target in reversed(chain):
            node = grid_ring_step(node, i) if kind == "step" else grid_affine_raise(node)
            assert node.alpha == target
            if target == alpha or self._keep(target):
                self.nodes[target] = node
        return node

    def forget(self, alpha):
        self.nodes.pop(Composition(alpha), None)

    def clear(self):
        self.nodes.clear()


def spec_grid(spec):
    return SpecGrid(spec)


def leading_image(numer_spec, alpha):
    """Coefficient of x^alpha in a specialized grid numerator, as a CycloLaurent."""
    r = numer_spec.basis.index[Composition(alpha)]
    row = numer_spec.arr[r]
    F = numer_spec.ring.F
    y0 = numer_spec.off[1]
    return CycloLaurent(F, {int(y) + y0: tuple(int(v) for v in row[:, y])
                            for y in np.flatnonzero(row.any(axis=0))})
