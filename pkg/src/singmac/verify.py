"""Specialization of Macdonald polynomials to the curve and the singularity checks.

verify_singular runs, for every RSYT S of the quasistaircase shape, exact
checks on M_{alpha(S)} at the specialization: pole-freeness, the spectral
relation M xi_i = t^CT[i] M, Dunkl annihilation (with the equivalent
M xi_i = M phi_i), and the Hecke action on the whole family. The heavy
checks use the grid engine; specialize_macdonald gives the two independent
sparse routes (substitute and project) used to cross-check it.
"""
import time
from math import gcd

from .cherednik import (CriticalPairObstruction, cherednik_word, dunkl_expr,
                        jucys_murphy_word, projection_operator, spectral_exponents)
from .combinat import Composition, Partition, content_vector, enumerate_rsyt, inversions
from .critical import find_critical_partners
from .gridmac import GridBuilder, SpecializationPole
from .gridpoly import SpecGrid
from .heckerep import step_coefficients
from .macdonald import Denominator, build_macdonald, default_builder, factor_laurent
from .polyring import MacPolynomial, SpecField, SpecRing
from .quasistair import (ReductionStuck, alpha_of_tableau, build_quasistaircase,
                         equipolar_reduce, has_property_V, replay, theta_tableau)
from .scalars.special import (CycloLaurent, PoleError, Specialization,
                              divide_by_squarefree_factors, substitute)

REPORT_VERSION = "1.0"
DESK_MAX_N = 6
DESK_MAX_SIZE = 12

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


# -- specialize_macdonald ------------------------------------------------------

def _project(alpha, spec):
    N = len(alpha)
    partners = find_critical_partners(alpha, spec.m, spec.n, max_len=N)
    if partners:
        raise CriticalPairObstruction(alpha, partners[0].beta)
    op = projection_operator(alpha, spec)
    ring = SpecRing(spec)
    P = op.apply(MacPolynomial.monomial(ring, alpha))
    factors = op.normalizer_factors(ring)
    norm = op.normalizer(ring)
    if norm.is_zero():
        raise CriticalPairObstruction(alpha, alpha)
    if P.coeff(alpha) != norm:
        raise AssertionError(f"projection of x^{tuple(alpha)} has the wrong leading coefficient")
    F = spec.field
    return P.map_coeffs(SpecField(spec), lambda c: divide_by_squarefree_factors(F, c, factors))


def _substitute(alpha, spec, builder):
    P = build_macdonald(alpha, check=False, builder=builder)
    lead = P.coeff(alpha)
    P = P.scale(lead.inverse())
    out = {}
    for beta, c in P.terms.items():
        try:
            v = substitute(c, spec)
        except PoleError as exc:
            exc.witness = dict(exc.witness or {}, label=list(alpha), coefficient=list(beta))
            raise
        if not v.is_zero():
            out[beta] = v
    return MacPolynomial._raw(SpecField(spec), len(alpha), out)


def specialize_macdonald(alpha, spec, strategy="substitute", builder=None):
    """M_alpha on the curve, as a MacPolynomial over SpecField.

    substitute: build M_alpha over Q(q, t) and map each reduced coefficient
    (PoleError on a genuine pole). project: apply prod (xi_i - zeta_beta(i))
    to x^alpha on the curve and divide by its leading coefficient; this needs
    alpha to have no (m, n)-critical partner in N variables
    (CriticalPairObstruction otherwise). Both return the polynomial with
    coefficient 1 at x^alpha.
    """
    alpha = Composition(alpha)
    if strategy == "substitute":
        return _substitute(alpha, spec, builder or default_builder())
    if strategy == "project":
        return _project(alpha, spec)
    raise ValueError(f"unknown strategy {strategy!r}")


# -- reports -------------------------------------------------------------------

class Check:
    """One named check aggregated over all tableaux; keeps the first failure."""

    def __init__(self, name, enabled=True, reason=None):
        self.name = name
        self.status = PASS if enabled else SKIPPED
        self.items = 0
        self.witness = None
        self.reason = reason

    def record(self, ok, witness=None):
        if self.status == SKIPPED:
            raise RuntimeError(f"check {self.name} is disabled")
        self.items += 1
        if not ok and self.status == PASS:
            self.status = FAIL
            self.witness = witness
        return ok

    def to_json(self):
        out = {"name": self.name, "status": self.status, "items": self.items}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason:
            out["reason"] = self.reason
        return out


class VerificationReport:
    def __init__(self, qs, spec, tableaux, mode):
        self.qs, self.spec, self.mode = qs, spec, mode
        self.tableaux = tableaux
        self.labels = [alpha_of_tableau(qs, S) for S in tableaux]
        self.checks = {}
        self.seconds = 0.0
        self.sizes = {}

    def add(self, name, enabled=True, reason=None):
        c = Check(name, enabled, reason)
        self.checks[name] = c
        return c

    def __getitem__(self, name):
        return self.checks[name]

    @property
    def passed(self):
        return all(c.status != FAIL for c in self.checks.values())

    def failures(self):
        return [c for c in self.checks.values() if c.status == FAIL]

    def to_json(self):
        return {
            "version": REPORT_VERSION,
            "subject": {"quasistaircase": self.qs.to_json(), "specialization": self.spec.to_json(),
                        "tau": list(self.qs.tau),
                        "labels": [list(a) for a in self.labels]},
            "mode": self.mode,
            "passed": self.passed,
            "checks": [c.to_json() for c in self.checks.values()],
            "seconds": round(self.seconds, 3),
            "sizes": self.sizes,
        }


# -- helpers on the grid -------------------------------------------------------

def _first_label(g):
    """Label of some nonzero row of a grid polynomial (a mismatch witness)."""
    rows = g.arr.any(axis=(1, 2)).nonzero()[0]
    return list(g.basis.labels[rows[0]]) if len(rows) else None


def _t_power(spec, c):
    return spec.image_exponents(0, c)


def _strip_common(d1, d2):
    """Parts of two Denominators left after removing their common factors."""
    common = d1.factors & d2.factors
    r1 = Denominator(d1.sign, d1.mono, d1.factors - common)
    r2 = Denominator(d2.sign, d2.mono, d2.factors - common)
    return r1, r2


def _denominator_image(denom, spec):
    F = spec.field
    out = CycloLaurent.const(F, denom.sign).mul_unit(*spec.image_exponents(*denom.mono))
    for key, mult in sorted(denom.factors.items()):
        img = spec.map_poly(factor_laurent(key))
        for _ in range(mult):
            out = out * img
    return out


def _scalar_parts(x, spec):
    """(numer, denom) images of a QtScalar whose denominator does not vanish on the curve."""
    den = spec.map_poly(x.denom)
    if den.is_zero():
        raise PoleError("coefficient has a pole on the curve", residual=x.denom)
    return spec.map_poly(x.numer), den


class _Family:
    """Specialized numerators n_S and generic denominators d_S for the labels in play."""

    def __init__(self, spec, builder):
        self.spec = spec
        self.ring = SpecGrid(spec)
        self.builder = builder
        self.cache = {}

    def get(self, alpha):
        """(numer image, Denominator) or raise SpecializationPole."""
        alpha = Composition(alpha)
        hit = self.cache.get(alpha)
        if hit is None:
            M = self.builder.scaled(alpha)
            numer, _ = M.specialize(self.ring)
            hit = (numer, M.denom.copy())
            self.cache[alpha] = hit
            if not GridBuilder._keep(alpha):
                self.builder.forget(alpha)
        return hit

    def pole_witness(self, alpha):
        """None when M_alpha is pole-free on the curve, else a witness dict."""
        try:
            self.get(alpha)
        except SpecializationPole as exc:
            return exc.witness()
        return None


# -- verify_singular -------------------------------------------------------------

def is_desk_scale(qs):
    return qs.N <= DESK_MAX_N and sum(qs.lam) <= DESK_MAX_SIZE


def verify_singular(qs, spec, full=False, builder=None):
    """VerificationReport for the family {M_alpha(S) : S in Tab_tau} at the specialization.

    Structural checks always run. The polynomial checks run when the
    instance is within the desk caps (N <= 6, |lambda| <= 12) or full is set.
    """
    if (spec.m, spec.n) != (qs.m, qs.n):
        raise ValueError(f"specialization ({spec.m}, {spec.n}) does not match "
                         f"quasistaircase ({qs.m}, {qs.n})")
    start = time.time()
    heavy = full or is_desk_scale(qs)
    tabs = enumerate_rsyt(qs.tau)
    report = VerificationReport(qs, spec, tabs, "full" if heavy else "structural")
    _structural_checks(report)
    reason = None if heavy else "beyond desk caps; rerun with full=True"
    names = ("pole-free", "spectral", "dunkl", "xi-equals-phi", "isotype", "equipolar")
    for name in names:
        report.add(name, heavy, reason)
    if heavy:
        _polynomial_checks(report, builder or GridBuilder())
    report.seconds = time.time() - start
    return report


def _structural_checks(report):
    qs, spec = report.qs, report.spec
    lam = Partition(qs.lam)
    labels = report.add("labels")
    seen = set()
    for S, a in zip(report.tableaux, report.labels):
        labels.record(a.sorted_desc() == lam and a not in seen,
                      {"tableau": S.to_json(), "label": list(a)})
        seen.add(a)

    spectral = report.add("spectral-exponents")
    for S, a in zip(report.tableaux, report.labels):
        z = spectral_exponents(a)
        ct = content_vector(S)
        for i in range(qs.N):
            ok = spec.image_exponents(*z[i]) == _t_power(spec, ct[i])
            spectral.record(ok, {"tableau": S.to_json(), "i": i + 1,
                                 "zeta": list(z[i]), "content": ct[i]})

    # S s_i with i, i+1 in one column has V(j, k) for the two cells and reduces to Theta
    theta = report.add("theta-reduction")
    targets = {}
    for S in report.tableaux:
        for i in range(1, qs.N):
            if S.col(i) != S.col(i + 1):
                continue
            T = S.swapped(i)
            j, k = min(S.row(i), S.row(i + 1)), S.col(i)
            where = {"tableau": S.to_json(), "i": i, "j": j, "k": k}
            if not theta.record(has_property_V(T, j, k), dict(where, error="no property V")):
                continue
            try:
                steps = equipolar_reduce(T, j, k)
            except ReductionStuck as exc:
                theta.record(False, dict(where, error=str(exc)))
                continue
            path = replay(T, steps)
            invs = [inversions(X) for X in path]
            target = theta_tableau(qs.tau, j, k)
            targets[(j, k)] = target
            theta.record(path[-1] == target and all(x > y for x, y in zip(invs, invs[1:])),
                         dict(where, steps=steps))

    crit = report.add("critical-pairs")
    subjects = [(S.to_json(), a) for S, a in zip(report.tableaux, report.labels)]
    subjects += [({"theta": [j, k]}, alpha_of_tableau(qs, T)) for (j, k), T in sorted(targets.items())]
    for where, a in subjects:
        found = find_critical_partners(a, qs.m, qs.n, max_len=qs.N)
        crit.record(not found, {"subject": where, "label": list(a),
                                "partner": list(found[0].beta) if found else None})


def _polynomial_checks(report, builder):
    qs, spec = report.qs, report.spec
    N = qs.N
    fam = _Family(spec, builder)
    poles = {}
    for S, a in zip(report.tableaux, report.labels):
        w = fam.pole_witness(a)
        poles[S] = w
        report["pole-free"].record(w is None, w and dict(w, tableau=S.to_json()))
    statuses = {w is None for w in poles.values()}
    report["equipolar"].record(len(statuses) == 1,
                               {"pole_free": [S.to_json() for S, w in poles.items() if w is None],
                                "poles": [S.to_json() for S, w in poles.items() if w]})

    words = {i: (cherednik_word(i, N), jucys_murphy_word(i, N), dunkl_expr(i, N))
             for i in range(1, N + 1)}
    rows = 0
    for S, a in zip(report.tableaux, report.labels):
        if poles[S] is not None:
            continue
        n, _ = fam.get(a)
        rows = max(rows, n.arr.shape[0])
        ct = content_vector(S)
        for i in range(1, N + 1):
            xi, phi, dunkl = words[i]
            nx = n.apply_expr(xi)
            diff = nx - n.mul_mono(0, ct[i - 1])
            report["spectral"].record(diff.is_zero(), {"tableau": S.to_json(), "i": i,
                                                       "coefficient": _first_label(diff)})
            diff = nx - n.apply_expr(phi)
            report["xi-equals-phi"].record(diff.is_zero(), {"tableau": S.to_json(), "i": i,
                                                            "coefficient": _first_label(diff)})
            try:
                d = n.apply_expr(dunkl)
                ok, where = d.is_zero(), _first_label(d)
            except ArithmeticError as exc:
                ok, where = False, str(exc)
            report["dunkl"].record(ok, {"tableau": S.to_json(), "i": i, "coefficient": where})
        for i in range(1, N):
            _isotype_step(report, fam, S, a, i)
    report.sizes = {"tableaux": len(report.tableaux), "max_rows": rows,
                    "omega_order": spec.M}


def _isotype_step(report, fam, S, a, i):
    spec = report.spec
    check = report["isotype"]
    where = {"tableau": S.to_json(), "i": i}
    n, dS = fam.get(a)
    nT = n.apply_T(i)
    if S.row(i) == S.row(i + 1):
        check.record((nT - n.mono_t()).is_zero(), dict(where, case="same row"))
        return
    if S.col(i) == S.col(i + 1):
        check.record((nT + n).is_zero(), dict(where, case="same column"))
        w = fam.pole_witness(a.swap(i))
        check.record(w is None, dict(where, case="swapped label has a pole", pole=w))
        return
    S2 = S.swapped(i)
    a2 = alpha_of_tableau(report.qs, S2)
    n2, d2 = fam.get(a2)
    off, diag = step_coefficients(S.content(i) - S.content(i + 1))
    on, od = _scalar_parts(off, spec)
    dn, dd = _scalar_parts(diag, spec)
    gS, g2 = _strip_common(dS, d2)
    cS, c2 = _denominator_image(gS, spec), _denominator_image(g2, spec)
    # (n_S T_i) c_S' od dd = on dd c_S n_S' + dn od c_S' n_S
    lhs = nT.scale_spec(c2 * od * dd)
    rhs = n2.scale_spec(on * dd * cS) + n.scale_spec(dn * od * c2)
    diff = lhs - rhs
    check.record(diff.is_zero(), dict(where, case="exchange", partner=S2.to_json(),
                                      coefficient=_first_label(diff)))


# -- sweeps and parameter enumeration ---------------------------------------------

def valid_k(m, n):
    """Normalized k values: 0 when gcd(m, n) = 1, else 1 <= k < g coprime to g."""
    g = gcd(m, n)
    if g == 1:
        return [0]
    return [k for k in range(1, g) if gcd(k, g) == 1]


def verify_instance(m, n, d, K, N, k, full=False, builder=None):
    qs = build_quasistaircase(m, n, d, K, N)
    return verify_singular(qs, Specialization(m, n, k), full=full, builder=builder)


def enumerate_singular_params(lam, N):
    """Curves on which the two-part quasistaircase lambda = (m^tau2, 0^(N - tau2)) is singular.

    Returns dicts with m', n', d, the order of omega and the relation, one for
    each divisor d of g = gcd(m, n) with d <= n / (tau2 + 1), where
    n = N - tau2 + 1, (m', n') = (m, n) / d and omega has order g / d.
    """
    lam = Composition(lam).padded(N) if len(lam) < N else Composition(lam)
    if len(lam) != N:
        raise ValueError(f"label has {len(lam)} entries, expected N = {N}")
    parts = [x for x in lam if x]
    if not parts or len(set(parts)) != 1 or tuple(lam) != tuple(sorted(lam, reverse=True)):
        raise ValueError(f"{tuple(lam)} is not a two-row rectangle label (m^tau2, 0^(N - tau2))")
    m, tau2 = parts[0], len(parts)
    if 2 * tau2 > N:
        raise ValueError(f"tau2 = {tau2} exceeds N / 2")
    n = N - tau2 + 1
    g = gcd(m, n)
    out = []
    for d in range(1, g + 1):
        if g % d or d * (tau2 + 1) > n:
            continue
        m1, n1 = m // d, n // d
        qs = build_quasistaircase(m1, n1, d, 1, N)
        assert tuple(qs.lam) == tuple(lam)
        out.append({"m": m1, "n": n1, "d": d, "omega_order": g // d,
                    "relation": f"q^{m1} t^{n1} = 1", "quasistaircase": list(qs.key())})
    return out


def singular_params(m, tau2, N):
    return enumerate_singular_params((m,) * tau2 + (0,) * (N - tau2), N)
