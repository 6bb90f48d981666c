"""Command line entry point: `singmac <group> <command> ...`.

Output is JSON on stdout unless --format text is given. Exit codes: 0 when
every check passed, 1 when a check failed, 2 for usage errors, 3 when a
search budget or size cap was hit.
"""
import argparse
import json
import sys

from . import cherednik, polyring
from .combinat import Composition, Partition, content_vector, enumerate_rsyt, inversions
from .critical import DEFAULT_BUDGET, SearchBudgetExceeded, find_critical_partners
from .macdonald import build_macdonald, monic_normalize, spectral_vector
from .quasistair import build_quasistaircase
from .scalars.special import Specialization
from .verify import singular_params, verify_singular

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


class BudgetError(Exception):
    pass


def _composition(text):
    try:
        return Composition.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}: {exc}") from exc


def _scalar_text(c):
    if hasattr(c, "numer") and hasattr(c.numer, "terms"):
        num, den = repr(c.numer), repr(c.denom)
        return num if den == "1" else f"({num}) / ({den})"
    return repr(c)


# -- handlers: each returns (payload, text, exit code) ----------------------------

def qs_info(args):
    qs = build_quasistaircase(args.m, args.n, args.d, args.K, args.N)
    data = qs.to_json()
    lines = [f"lambda    {tuple(qs.lam)}", f"tau       {tuple(qs.tau)}", f"nu        {qs.nu}"]
    lines += [f"I{j:<8} {list(iv)}" for j, iv in enumerate(qs.intervals, start=1)]
    return data, "\n".join(lines), EXIT_OK


def qs_tableaux(args):
    shape = Partition(args.shape)
    tabs = enumerate_rsyt(shape, cap=args.cap)
    data = [dict(S.to_json(), inv=inversions(S), content=list(content_vector(S))) for S in tabs]
    text = "\n\n".join(f"inv {inversions(S)}  content {content_vector(S)}\n{S.text()}" for S in tabs)
    return data, text, EXIT_OK


def _build(alpha, N, monic):
    if N is not None:
        if len(alpha) > N:
            raise UsageError(f"--alpha has {len(alpha)} entries but --N is {N}")
        alpha = alpha.padded(N)
    P = build_macdonald(alpha)
    return alpha, (monic_normalize(P) if monic else P)


def mac_build(args):
    alpha, P = _build(args.alpha, args.N, args.monic)
    data = P.to_json()
    data["alpha"] = list(alpha)
    data["spectral"] = spectral_vector(alpha).to_json()
    return data, _poly_text(P), EXIT_OK


def _poly_text(P):
    items = P.to_json()["terms"]
    return "\n".join(f"{tuple(t['alpha'])}  {_scalar_text(P.terms[tuple(t['alpha'])])}" for t in items)


_OPS = {
    "Ti": lambda p, i: polyring.apply_Ti(p, i),
    "Ti-inv": lambda p, i: polyring.apply_Ti_inv(p, i),
    "pi": lambda p, i: polyring.apply_shift(p),
    "xi": lambda p, i: cherednik.apply_cherednik(p, i),
    "dunkl": lambda p, i: cherednik.apply_dunkl(p, i),
    "phi": lambda p, i: cherednik.apply_jucys_poly(p, i),
}


def mac_act(args):
    alpha, P = _build(args.alpha, args.N, args.monic)
    if args.op != "pi" and args.i is None:
        raise UsageError(f"--op {args.op} needs --i")
    try:
        R = _OPS[args.op](P, args.i)
    except IndexError as exc:
        raise UsageError(str(exc)) from exc
    data = R.to_json()
    data.update({"alpha": list(alpha), "op": args.op, "i": args.i})
    return data, _poly_text(R) or "0", EXIT_OK


def critical_search(args):
    try:
        found = find_critical_partners(args.alpha, args.m, args.n, max_len=args.max_len,
                                       budget=args.budget)
    except SearchBudgetExceeded as exc:
        raise BudgetError(str(exc)) from exc
    data = [c.to_json() for c in found]
    text = "\n".join(f"len {c.length}  beta {tuple(c.beta[:c.length])}" for c in found) or "no partners"
    return data, text, EXIT_OK


def singular_verify(args):
    qs = build_quasistaircase(args.m, args.n, args.d, args.K, args.N)
    spec = Specialization(args.m, args.n, args.k)
    report = verify_singular(qs, spec, full=args.full)
    data = report.to_json()
    lines = [f"{qs!r}  {spec!r}  mode {report.mode}"]
    for c in report.checks.values():
        lines.append(f"{c.name:<20} {c.status:<8} {c.items}")
        if c.witness is not None:
            lines.append(f"    witness {json.dumps(c.witness)}")
    return data, "\n".join(lines), EXIT_OK if report.passed else EXIT_FAIL


def singular_params_cmd(args):
    rows = singular_params(args.m, args.tau2, args.N)
    text = "\n".join(f"d={r['d']}  {r['relation']:<16} omega order {r['omega_order']}" for r in rows)
    return rows, text, EXIT_OK


# -- parser ------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="singmac", description="Singular nonsymmetric Macdonald polynomials.")
    p.add_argument("--format", choices=("json", "text"), default="json")
    # leaf commands accept --format too, without overriding an earlier value
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "text"), default=argparse.SUPPRESS)
    groups = p.add_subparsers(dest="group", required=True)

    qs = groups.add_parser("qs", help="quasistaircases and tableaux").add_subparsers(dest="cmd", required=True)
    info = qs.add_parser("info", parents=[fmt], help="lambda, tau, nu and the intervals")
    for name in ("m", "n", "d", "K", "N"):
        info.add_argument(f"--{name}", type=int, required=True)
    info.set_defaults(func=qs_info)
    tab = qs.add_parser("tableaux", parents=[fmt], help="all RSYT of a shape")
    tab.add_argument("--shape", type=_composition, required=True, help="e.g. 3,1")
    tab.add_argument("--cap", type=int, default=14)
    tab.set_defaults(func=qs_tableaux)

    mac = groups.add_parser("mac", help="Macdonald polynomials").add_subparsers(dest="cmd", required=True)
    build = mac.add_parser("build", parents=[fmt], help="M_alpha over Q(q, t)")
    act = mac.add_parser("act", parents=[fmt], help="apply an operator to M_alpha")
    for sp in (build, act):
        sp.add_argument("--alpha", type=_composition, required=True, help="e.g. 0,2,1")
        sp.add_argument("--N", type=int, help="pad alpha with zeros to N entries")
        sp.add_argument("--monic", action="store_true", help="divide by the leading coefficient")
    build.set_defaults(func=mac_build)
    act.add_argument("--op", choices=sorted(_OPS), required=True)
    act.add_argument("--i", type=int)
    act.set_defaults(func=mac_act)

    crit = groups.add_parser("critical", help="(m, n)-critical pairs").add_subparsers(dest="cmd", required=True)
    search = crit.add_parser("search", parents=[fmt], help="all critical partners of alpha")
    search.add_argument("--alpha", type=_composition, required=True)
    search.add_argument("--m", type=int, required=True)
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--max-len", type=int)
    search.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    search.set_defaults(func=critical_search)

    sing = groups.add_parser("singular", help="singularity checks").add_subparsers(dest="cmd", required=True)
    ver = sing.add_parser("verify", parents=[fmt], help="verify a quasistaircase family at the specialization")
    for name in ("m", "n", "d", "K", "N"):
        ver.add_argument(f"--{name}", type=int, required=True)
    ver.add_argument("--k", type=int, default=1, help="omega = exp(2 pi i k / m)")
    ver.add_argument("--full", action="store_true", help="run polynomial checks beyond the desk caps")
    ver.set_defaults(func=singular_verify)
    par = sing.add_parser("params", parents=[fmt], help="singular curves of a two-part rectangle label")
    par.add_argument("--m", type=int, required=True)
    par.add_argument("--tau2", type=int, required=True)
    par.add_argument("--N", type=int, required=True)
    par.set_defaults(func=singular_params_cmd)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, text, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetError as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except ValueError as exc:
        # invalid parameters and size caps both surface as ValueError
        message = str(exc)
        print(f"error: {message}", file=sys.stderr)
        return EXIT_BUDGET if "cap" in message else EXIT_USAGE
    if args.format == "text":
        print(text)
    else:
        print(json.dumps(payload, indent=2))
    return code


if __name__ == "__main__":
    sys.exit(main())
