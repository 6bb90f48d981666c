"""Homogeneous polynomials stored as integer arrays, for the large builds.

A GridPoly of degree s in N variables holds one row per composition of s
(in the order of combinat.compositions); each row is a 2-D integer grid of
coefficients with a shared offset. Two coefficient rings are supported:

* QtGrid: Laurent polynomials in q, t; axis 1 is the q exponent, axis 2 the
  t exponent.
* SpecGrid: Laurent polynomials in u over Z[zeta_M]; axis 1 holds the
  coordinates in the power basis 1, zeta, ..., zeta^(phi-1) (offset fixed at
  0) and axis 2 is the u exponent.

Arithmetic is exact int64 with an explicit overflow guard; OverflowError is
raised before any entry could wrap.
"""
from functools import lru_cache

import numpy as np
from scipy import sparse

from .combinat import Composition, compositions
from .polyring import MacPolynomial, QtRing, SpecRing
from .scalars.cyclotomic import cyclotomic_poly
from .scalars.poly2 import Poly2
from .scalars.special import CycloLaurent

LIMIT = 1 << 61


def _guard(value):
    if value >= LIMIT:
        raise OverflowError(f"grid entries could reach {value}, beyond the int64 guard")


def _maxabs(arr):
    return int(np.abs(arr).max()) if arr.size else 0


# -- bases and Hecke matrices ------------------------------------------------

class Basis:
    """Compositions of a fixed size into N parts with a row index."""

    def __init__(self, size, N):
        self.size, self.N = size, N
        self.labels = tuple(Composition(a) for a in compositions(size, N))
        self.index = {a: k for k, a in enumerate(self.labels)}
        self.exps = np.array(self.labels, dtype=np.int64).reshape(len(self.labels), N)

    def __len__(self):
        return len(self.labels)


@lru_cache(maxsize=None)
def basis(size, N):
    return Basis(size, N)


@lru_cache(maxsize=None)
def hecke_matrices(size, N, i):
    """(A, B, bound) with p T_i = A p + t (B p) on the rows of basis(size, N).

    bound is the largest absolute row sum of A plus that of B.
    """
    bs = basis(size, N)
    idx = bs.index
    rows_a, cols_a, vals_a = [], [], []
    rows_b, cols_b, vals_b = [], [], []
    k0, k1 = i - 1, i

    def put(rows, cols, vals, key, col, v):
        rows.append(idx[key])
        cols.append(col)
        vals.append(v)

    for col, alpha in enumerate(bs.labels):
        a, b = alpha[k0], alpha[k1]
        if a == b:
            put(rows_b, cols_b, vals_b, alpha, col, 1)
            continue
        head, tail = alpha[:k0], alpha[k1 + 1:]
        sw = head + (b, a) + tail
        middles = [head + (a + b - j, j) + tail for j in range(min(a, b) + 1, max(a, b))]
        if a > b:
            put(rows_a, cols_a, vals_a, sw, col, 1)
            for key in middles:
                put(rows_a, cols_a, vals_a, key, col, 1)
                put(rows_b, cols_b, vals_b, key, col, -1)
        else:
            put(rows_b, cols_b, vals_b, sw, col, 1)
            put(rows_b, cols_b, vals_b, alpha, col, 1)
            put(rows_a, cols_a, vals_a, alpha, col, -1)
            for key in middles:
                put(rows_b, cols_b, vals_b, key, col, 1)
                put(rows_a, cols_a, vals_a, key, col, -1)
    D = len(bs)
    A = sparse.csr_matrix((np.array(vals_a, dtype=np.int64), (rows_a, cols_a)), shape=(D, D))
    B = sparse.csr_matrix((np.array(vals_b, dtype=np.int64), (rows_b, cols_b)), shape=(D, D))
    A.sum_duplicates()
    B.sum_duplicates()

    def rowmax(X):
        if X.nnz == 0:
            return 0
        return int(np.abs(X).sum(axis=1).max())

    return A, B, rowmax(A) + rowmax(B)


@lru_cache(maxsize=None)
def _shift_maps(size, N):
    """Row maps for x^alpha pi: (target rows, q-exponent per row)."""
    bs = basis(size, N)
    target = np.array([bs.index[Composition(a[1:] + a[:1])] for a in bs.labels], dtype=np.int64)
    return target, bs.exps[:, 0].copy()


@lru_cache(maxsize=None)
def _mul_x_map(size, N, i):
    bs, up = basis(size, N), basis(size + 1, N)
    e = np.zeros(N, dtype=np.int64)
    e[i - 1] = 1
    return np.array([up.index[Composition(tuple(r))] for r in (bs.exps + e)], dtype=np.int64)


# -- coefficient rings --------------------------------------------------------

class QtGrid:
    """Coefficients in Z[q^+-1, t^+-1]."""

    name = "qt"

    def mono(self, a, b):
        """q^a t^b as (matrix on axis 1 or None, shift on axis 1, shift on axis 2)."""
        return None, a, b

    def t_shift(self):
        return 0, 1

    def unit_height(self):
        return 1

    def __eq__(self, other):
        return isinstance(other, QtGrid)

    def __hash__(self):
        return hash(self.name)


class SpecGrid:
    """Coefficients in Z[zeta_M][u^+-1] on the curve of a Specialization."""

    name = "spec"

    def __init__(self, spec):
        self.spec = spec
        F = spec.field
        self.F = F
        self.phi = F.phi
        M = F.M
        # zmat[s] multiplies power-basis coordinates by zeta^s
        self.zmat = [np.array([F.powers[(s + j) % M] for j in range(F.phi)],
                              dtype=np.int64).T for s in range(M)]

    def mono(self, a, b):
        s, e = self.spec.image_exponents(a, b)
        return (self.zmat[s] if s else None), 0, e

    def t_shift(self):
        return 0, self.spec.t_u

    def unit_height(self):
        return self.phi

    def element_matrix(self, vec):
        """Matrix of multiplication by an element of Z[zeta_M] given in the power basis."""
        out = np.zeros((self.phi, self.phi), dtype=np.int64)
        for k, c in enumerate(vec):
            if c:
                out += int(c) * self.zmat[k]
        return out

    def __eq__(self, other):
        return isinstance(other, SpecGrid) and other.spec == self.spec

    def __hash__(self):
        return hash((self.name, self.spec))


def _apply_axis1(mat, arr):
    if mat is None:
        return arr
    _guard(_maxabs(arr) * int(np.abs(mat).sum(axis=1).max()))
    return np.einsum("ij,djy->diy", mat, arr)


# -- the polynomial type -------------------------------------------------------

class GridPoly:
    """Homogeneous polynomial with integer-grid coefficients (see module doc)."""

    __slots__ = ("ring", "N", "size", "arr", "off")

    def __init__(self, ring, N, size, arr, off=(0, 0)):
        self.ring, self.N, self.size = ring, N, size
        self.arr = arr
        self.off = (int(off[0]), int(off[1]))

    @classmethod
    def zero(cls, ring, N, size):
        h = 1 if isinstance(ring, QtGrid) else ring.unit_height()
        return cls(ring, N, size, np.zeros((len(basis(size, N)), h, 0), dtype=np.int64))

    @classmethod
    def one(cls, ring, N):
        h = ring.unit_height()
        arr = np.zeros((1, h, 1), dtype=np.int64)
        arr[0, 0, 0] = 1
        return cls(ring, N, 0, arr)

    @property
    def basis(self):
        return basis(self.size, self.N)

    def copy(self):
        return GridPoly(self.ring, self.N, self.size, self.arr.copy(), self.off)

    def _same(self, other):
        if self.ring != other.ring or self.N != other.N or self.size != other.size:
            raise ValueError("grid polynomials live in different spaces")

    def is_zero(self):
        return not self.arr.any()

    def trim(self):
        """Drop all-zero borders on both coefficient axes (axis 1 only for QtGrid)."""
        arr = self.arr
        if not arr.any():
            return GridPoly.zero(self.ring, self.N, self.size)
        y = np.flatnonzero(arr.any(axis=(0, 1)))
        y0, y1 = int(y[0]), int(y[-1]) + 1
        if isinstance(self.ring, QtGrid):
            x = np.flatnonzero(arr.any(axis=(0, 2)))
            x0, x1 = int(x[0]), int(x[-1]) + 1
        else:
            x0, x1 = 0, arr.shape[1]
        if (x0, y0) == (0, 0) and (x1, y1) == arr.shape[1:]:
            return self
        return GridPoly(self.ring, self.N, self.size, arr[:, x0:x1, y0:y1].copy(),
                        (self.off[0] + x0, self.off[1] + y0))

    # combination of shifted pieces ---------------------------------------

    @staticmethod
    def _sum(ring, N, size, pieces, nrows):
        """Sum of pieces (rows or None, arr, (x0, y0)) into one array of nrows rows."""
        pieces = [p for p in pieces if p[1].shape[2] and p[1].shape[1]]
        if not pieces:
            return GridPoly.zero(ring, N, size)
        x0 = min(p[2][0] for p in pieces)
        y0 = min(p[2][1] for p in pieces)
        x1 = max(p[2][0] + p[1].shape[1] for p in pieces)
        y1 = max(p[2][1] + p[1].shape[2] for p in pieces)
        bound = sum(_maxabs(p[1]) for p in pieces)
        _guard(bound)
        out = np.zeros((nrows, x1 - x0, y1 - y0), dtype=np.int64)
        for rows, arr, (px, py) in pieces:
            sx = slice(px - x0, px - x0 + arr.shape[1])
            sy = slice(py - y0, py - y0 + arr.shape[2])
            if rows is None:
                out[:, sx, sy] += arr
            else:
                out[rows, sx, sy] += arr      # rows within one piece are distinct
        return GridPoly(ring, N, size, out, (x0, y0))

    def _piece(self, a=0, b=0, coeff=1):
        mat, dx, dy = self.ring.mono(a, b)
        arr = _apply_axis1(mat, self.arr)
        if coeff != 1:
            _guard(_maxabs(arr) * abs(coeff))
            arr = arr * coeff
        return None, arr, (self.off[0] + dx, self.off[1] + dy)

    def __add__(self, other):
        self._same(other)
        return GridPoly._sum(self.ring, self.N, self.size,
                             [(None, self.arr, self.off), (None, other.arr, other.off)],
                             self.arr.shape[0]).trim()

    def __neg__(self):
        return GridPoly(self.ring, self.N, self.size, -self.arr, self.off)

    def __sub__(self, other):
        return self + (-other)

    def __eq__(self, other):
        return isinstance(other, GridPoly) and (self - other).is_zero()

    __hash__ = None

    def mul_int(self, c):
        _guard(_maxabs(self.arr) * abs(c))
        return GridPoly(self.ring, self.N, self.size, self.arr * c, self.off).trim()

    def mul_mono(self, a, b):
        _, arr, off = self._piece(a, b)
        return GridPoly(self.ring, self.N, self.size, arr, off)

    def scale_laurent(self, p):
        """Multiply by a Laurent polynomial in q, t (a Poly2)."""
        pieces = [self._piece(a, b, c) for (a, b), c in p.terms.items()]
        return GridPoly._sum(self.ring, self.N, self.size, pieces, self.arr.shape[0]).trim()

    def scale_spec(self, c):
        """Multiply by a CycloLaurent (SpecGrid only)."""
        ring = self.ring
        pieces = []
        for e, vec in c.terms.items():
            arr = _apply_axis1(ring.element_matrix(vec), self.arr)
            pieces.append((None, arr, (0, self.off[1] + e)))
        return GridPoly._sum(ring, self.N, self.size, pieces, self.arr.shape[0]).trim()

    # operators ------------------------------------------------------------

    def apply_T(self, i):
        """p T_i."""
        if not 1 <= i < self.N:
            raise IndexError(f"T_{i} out of range for N={self.N}")
        if self.size == 0 or not self.arr.size:
            return self.mono_t()
        A, B, bound = hecke_matrices(self.size, self.N, i)
        _guard(_maxabs(self.arr) * bound)
        D, X, Y = self.arr.shape
        flat = self.arr.reshape(D, X * Y)
        pa = (A @ flat).reshape(D, X, Y)
        pb = (B @ flat).reshape(D, X, Y)
        dx, dy = self.ring.t_shift()
        return GridPoly._sum(self.ring, self.N, self.size,
                             [(None, pa, self.off),
                              (None, pb, (self.off[0] + dx, self.off[1] + dy))], D).trim()

    def mono_t(self):
        return self.mul_mono(0, 1)

    def apply_T_inv(self, i):
        """p T_i^-1 = (p T_i + p - t p) / t."""
        return (self.apply_T(i) + self - self.mono_t()).mul_mono(0, -1)

    def apply_pi(self):
        """x^alpha pi = q^alpha_1 x^(alpha_2, ..., alpha_N, alpha_1)."""
        target, qexp = _shift_maps(self.size, self.N)
        pieces = []
        for v in np.unique(qexp):
            rows = np.flatnonzero(qexp == v)
            sub = GridPoly(self.ring, self.N, self.size, self.arr[rows], self.off)
            _, arr, off = sub._piece(int(v), 0)
            pieces.append((target[rows], arr, off))
        return GridPoly._sum(self.ring, self.N, self.size, pieces, self.arr.shape[0]).trim()

    def mul_x(self, i):
        if not 1 <= i <= self.N:
            raise IndexError(f"x_{i} out of range for N={self.N}")
        rows = _mul_x_map(self.size, self.N, i)
        D = len(basis(self.size + 1, self.N))
        out = np.zeros((D,) + self.arr.shape[1:], dtype=np.int64)
        out[rows] = self.arr
        return GridPoly(self.ring, self.N, self.size + 1, out, self.off)

    def div_x(self, i):
        """Exact division by x_i; raises ArithmeticError if a term lacks x_i."""
        if not 1 <= i <= self.N:
            raise IndexError(f"x_{i} out of range for N={self.N}")
        if self.size == 0:
            if self.is_zero():
                return self
            raise ArithmeticError(f"constant term is not divisible by x_{i}")
        exps = self.basis.exps
        bad = exps[:, i - 1] == 0
        if self.arr[bad].any():
            raise ArithmeticError(f"a term is not divisible by x_{i}")
        rows = _mul_x_map(self.size - 1, self.N, i)
        return GridPoly(self.ring, self.N, self.size - 1, self.arr[rows].copy(), self.off)

    def apply_expr(self, expr):
        """Apply a cherednik.OperatorExpr."""
        if expr.N != self.N:
            raise ValueError(f"operator on {expr.N} variables applied to N={self.N}")
        p = self
        for factor in expr.factors:
            acc = None
            for c, word in factor:
                r = p
                for letter in word:
                    r = r._letter(letter)
                if c != 1:
                    r = r.mul_int(c)
                acc = r if acc is None else acc + r
            p = acc
        return p

    def _letter(self, letter):
        kind = letter[0]
        if kind == "T":
            return self.apply_T(letter[1])
        if kind == "Tinv":
            return self.apply_T_inv(letter[1])
        if kind == "pi":
            return self.apply_pi()
        if kind == "x":
            return self.mul_x(letter[1])
        if kind == "xinv":
            return self.div_x(letter[1])
        if kind == "mono":
            return self.mul_mono(letter[1], letter[2])
        raise ValueError(f"unknown operator letter {letter!r}")

    # exact division by Phi_e(q^a t^b) ----------------------------------------

    def divide_factor(self, key, rows=None):
        """self / Phi_e(q^a t^b) coefficientwise (QtGrid), or None when it does not divide.

        With rows given only those rows are divided (a cheap pre-test).
        """
        if not isinstance(self.ring, QtGrid):
            raise TypeError("factor division needs Laurent coefficients in q, t")
        a, b, e = key
        P = self.arr if rows is None else self.arr[rows]
        off = self.off
        if a == 0:
            # divide along t: swap the coefficient axes and treat t as q
            Q = _divide_grid(np.swapaxes(P, 1, 2), b, 0, cyclotomic_poly(e))
            if Q is None:
                return None
            arr, (dy, dx) = np.ascontiguousarray(np.swapaxes(Q[0], 1, 2)), Q[1]
        else:
            Q = _divide_grid(P, a, b, cyclotomic_poly(e))
            if Q is None:
                return None
            arr, (dx, dy) = Q
        return GridPoly(self.ring, self.N, self.size, arr, (off[0] + dx, off[1] + dy))

    def failing_row(self, key):
        """Index of some row not divisible by the factor (None if all divide)."""
        for r in range(self.arr.shape[0]):
            if self.arr[r].any() and self.divide_factor(key, rows=[r]) is None:
                return r
        return None

    # conversion ------------------------------------------------------------

    def specialize(self, spec_ring):
        """Image of a QtGrid polynomial under the specialization of spec_ring."""
        if not isinstance(self.ring, QtGrid):
            raise TypeError("only q, t grids can be specialized")
        spec = spec_ring.spec
        F = spec_ring.F
        D, X, Y = self.arr.shape
        x0, y0 = self.off
        images = {}
        for x in range(X):
            for y in range(Y):
                s, u = spec.image_exponents(x0 + x, y0 + y)
                images.setdefault(u, []).append((s, x, y))
        if not images:
            return GridPoly.zero(spec_ring, self.N, self.size)
        u0, u1 = min(images), max(images)
        out = np.zeros((D, F.phi, u1 - u0 + 1), dtype=np.int64)
        powers = np.array(F.powers, dtype=np.int64)
        bound = _maxabs(self.arr) * X * Y * max(1, int(np.abs(powers).max()))
        _guard(bound)
        for u, items in images.items():
            acc = np.zeros((D, F.phi), dtype=np.int64)
            for s, x, y in items:
                col = self.arr[:, x, y]
                if col.any():
                    acc += np.outer(col, powers[s])
            out[:, :, u - u0] = acc
        return GridPoly(spec_ring, self.N, self.size, out, (0, u0)).trim()

    def to_mac(self):
        """The same polynomial as a MacPolynomial (Poly2 or CycloLaurent coefficients)."""
        labels = self.basis.labels
        x0, y0 = self.off
        terms = {}
        if isinstance(self.ring, QtGrid):
            domain = QtRing()
            for r in np.flatnonzero(self.arr.any(axis=(1, 2))):
                xs, ys = np.nonzero(self.arr[r])
                terms[labels[r]] = Poly2._raw({(int(x) + x0, int(y) + y0): int(self.arr[r, x, y])
                                               for x, y in zip(xs, ys)})
        else:
            domain = SpecRing(self.ring.spec)
            F = self.ring.F
            for r in np.flatnonzero(self.arr.any(axis=(1, 2))):
                cols = np.flatnonzero(self.arr[r].any(axis=0))
                terms[labels[r]] = CycloLaurent._raw(
                    F, {int(y) + y0: tuple(int(v) for v in self.arr[r, :, y]) for y in cols})
        return MacPolynomial._raw(domain, self.N, terms)

    @classmethod
    def from_mac(cls, p, ring):
        """Grid form of a homogeneous MacPolynomial over QtRing or SpecRing."""
        if not p.terms:
            raise ValueError("cannot infer the degree of the zero polynomial")
        sizes = {sum(a) for a in p.terms}
        if len(sizes) != 1:
            raise ValueError("polynomial is not homogeneous")
        size = sizes.pop()
        bs = basis(size, p.N)
        D = len(bs)
        if isinstance(ring, QtGrid):
            pts = [(a, b, c, bs.index[al]) for al, v in p.terms.items()
                   for (a, b), c in v.terms.items()]
            x0 = min(t[0] for t in pts)
            y0 = min(t[1] for t in pts)
            X = max(t[0] for t in pts) - x0 + 1
            Y = max(t[1] for t in pts) - y0 + 1
            arr = np.zeros((D, X, Y), dtype=np.int64)
            for a, b, c, r in pts:
                _guard(abs(c))
                arr[r, a - x0, b - y0] = c
            return cls(ring, p.N, size, arr, (x0, y0))
        pts = [(e, vec, bs.index[al]) for al, v in p.terms.items() for e, vec in v.terms.items()]
        y0 = min(t[0] for t in pts)
        Y = max(t[0] for t in pts) - y0 + 1
        arr = np.zeros((D, ring.phi, Y), dtype=np.int64)
        for e, vec, r in pts:
            for k, c in enumerate(vec):
                _guard(abs(c))
                arr[r, k, e - y0] = c
        return cls(ring, p.N, size, arr, (0, y0))


def _divide_grid(P, a, b, phi):
    """Quotient of each row of P by sum_s phi[s] Y^s with Y = (shift a on axis 1, b on axis 2), a > 0.

    Returns (Q, (dx, dy)) with Q's origin at P's origin plus (dx, dy), or None.
    """
    deg = len(phi) - 1
    D, X, Y = P.shape
    if not P.any():
        return np.zeros((D, 1, 0), dtype=np.int64), (0, 0)
    qx = X - a * deg
    qy = Y - abs(b) * deg
    if qx <= 0 or qy <= 0:
        return None
    oy = max(0, -b * deg)
    pad = abs(b) * deg
    Qp = np.zeros((D, X, qy + 2 * pad), dtype=np.int64)
    low = phi[:deg]
    bound = _maxabs(P)
    for i in range(qx - 1, -1, -1):
        top = P[:, i + a * deg, oy + b * deg: oy + b * deg + qy]
        acc = top.copy()
        for s, c in enumerate(low):
            if c:
                k = deg - s
                acc -= c * Qp[:, i + k * a, pad + k * b: pad + k * b + qy]
        Qp[:, i, pad: pad + qy] = acc
        bound = max(bound, _maxabs(acc))
        if bound * (deg + 1) * 4 >= LIMIT:
            return None
    Q = Qp[:, :qx, pad: pad + qy]
    # verify by multiplying back
    R = np.zeros_like(P)
    for s, c in enumerate(phi):
        if c:
            R[:, s * a: s * a + qx, oy + s * b: oy + s * b + qy] += c * Q
    if not np.array_equal(R, P):
        return None
    return np.ascontiguousarray(Q), (0, oy)
