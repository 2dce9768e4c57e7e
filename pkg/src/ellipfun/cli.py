"""Command-line front end: ``ellipfun {lattice,eval,identities,trajectory}``.

Complex numbers are written ``re,im``. Negative values may be given
directly (``-0.5`` or ``-3.6,2.2``).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys

import numpy as np

from . import dynamics as dyn
from . import integrals, jacobi, weierstrass
from .errors import EllipticError
from .identities import SCOPES, run_suites
from .lattice import new_lattice

EXIT_OK, EXIT_IDENTITY, EXIT_DOMAIN = 0, 1, 2

EPILOG = """exit codes:
  0  success
  1  an identity check failed (identities)
  2  domain error from the library (error name on stderr) or bad arguments
"""


class UsageError(Exception):
    pass


# -- parsing and formatting ---------------------------------------------------

def parse_complex(text: str) -> complex:
    parts = text.strip().split(",")
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise UsageError(f"cannot parse complex number {text.strip()!r}; expected 're,im'")


def parse_real(text: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise UsageError(f"cannot parse number {text.strip()!r}") from None


def fmt(x) -> str:
    if isinstance(x, complex):
        return f"{x.real:.16g},{x.imag:.16g}"
    return f"{float(x):.16g}"


def _jsonable(x):
    if isinstance(x, complex):
        return [x.real, x.imag]
    if isinstance(x, (np.floating, np.integer)):
        return float(x)
    return x


def _emit(text: str, out: str | None):
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# -- subcommands --------------------------------------------------------------

def cmd_lattice(args):
    lat = new_lattice(parse_complex(args.omega1), parse_complex(args.omega2))
    e = weierstrass.half_period_values(lat)
    q = weierstrass.quasi_periods(lat)
    legendre = abs(q.tau1 * lat.omega2 - q.tau2 * lat.omega1 - 2j * math.pi)
    report = {
        "omega1": lat.omega1,
        "omega2": lat.omega2,
        "g2": lat.g2,
        "g3": lat.g3,
        "discriminant": lat.discriminant,
        "e1": e.e1,
        "e2": e.e2,
        "e3": e.e3,
        "tau1": q.tau1,
        "tau2": q.tau2,
        "legendre_residual": float(legendre),
    }
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["quantity", "re", "im"])
        for key, v in report.items():
            v = complex(v)
            w.writerow([key, repr(v.real), repr(v.imag)])
        return buf.getvalue(), EXIT_OK
    return json.dumps({k: _jsonable(v) for k, v in report.items()}, indent=2) + "\n", EXIT_OK


def _lattice_fn(fn):
    def run(w1, w2, z):
        lat = new_lattice(parse_complex(w1), parse_complex(w2))
        return fn(lat, parse_complex(z))

    return run


def _reals(fn):
    def run(*xs):
        return fn(*(parse_real(x) for x in xs))

    return run


def _sn(t, k):
    return jacobi.jacobi_triple(t, k).sn


def _cn(t, k):
    return jacobi.jacobi_triple(t, k).cn


def _dn(t, k):
    return jacobi.jacobi_triple(t, k).dn


# name -> (arity, callable, argument help)
EVAL_FUNCTIONS = {
    "wp": (3, _lattice_fn(weierstrass.wp), "OMEGA1 OMEGA2 Z"),
    "wp'": (3, _lattice_fn(weierstrass.wp_prime), "OMEGA1 OMEGA2 Z"),
    "zeta": (3, _lattice_fn(weierstrass.zeta_w), "OMEGA1 OMEGA2 Z"),
    "sigma": (3, _lattice_fn(weierstrass.sigma_w), "OMEGA1 OMEGA2 Z"),
    "sn": (2, _reals(_sn), "T K"),
    "cn": (2, _reals(_cn), "T K"),
    "dn": (2, _reals(_dn), "T K"),
    "am": (2, _reals(jacobi.am), "T K"),
    "F": (2, _reals(integrals.incomplete_F), "K PHI"),
    "E": (2, _reals(integrals.incomplete_E), "K PHI"),
    "Pi": (3, _reals(integrals.incomplete_Pi), "K L PHI"),
    "K": (1, _reals(integrals.complete_K), "K"),
    "Ecomp": (1, _reals(integrals.complete_E), "K"),
}
_ALIASES = {"wp_prime": "wp'", "wpp": "wp'"}


def cmd_eval(args):
    name = _ALIASES.get(args.function, args.function)
    if name not in EVAL_FUNCTIONS:
        raise UsageError(f"unknown function {args.function!r}; choose from {', '.join(EVAL_FUNCTIONS)}")
    arity, fn, sig = EVAL_FUNCTIONS[name]
    if len(args.params) != arity:
        raise UsageError(f"{name} takes {arity} argument(s): {sig}")
    value = fn(*args.params)
    if args.format == "json":
        return json.dumps({"function": name, "args": list(args.params), "value": _jsonable(value)}) + "\n", EXIT_OK
    if args.format == "csv":
        return f"function,value\n{name},{fmt(value)}\n", EXIT_OK
    return fmt(value) + "\n", EXIT_OK


def cmd_identities(args):
    report = run_suites(args.scope, args.tol)
    ok = all(c["passed"] for checks in report.values() for c in checks)
    if args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["suite", "check", "residual", "tol", "passed"])
        for scope, checks in report.items():
            for c in checks:
                w.writerow([scope, c["name"], repr(c["residual"]), repr(c["tol"]), c["passed"]])
        text = buf.getvalue()
    else:
        text = json.dumps({"passed": ok, "suites": report}, indent=2) + "\n"
    return text, EXIT_OK if ok else EXIT_IDENTITY


def _table(columns: dict, fmt_name: str, summary: dict):
    if fmt_name == "json":
        return json.dumps({"summary": summary, "columns": {k: [float(x) for x in v] for k, v in columns.items()}}) + "\n"
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(columns.keys())
    for row in zip(*columns.values()):
        w.writerow(repr(float(x)) for x in row)
    return buf.getvalue()


def _steps(args):
    if not (args.dt > 0 and args.t_max > 0):
        raise UsageError("--dt and --t-max must be positive")
    if args.every < 1:
        raise UsageError("--every must be >= 1")
    return max(1, int(round(args.t_max / args.dt)))


def _traj_pendulum(args):
    steps = _steps(args)
    if args.v0 is not None:
        p = dyn.CirculatingParams(args.l, args.g, args.v0)
        closed = lambda t: dyn.pendulum_circulating(p, t)  # noqa: E731
    else:
        p = dyn.PendulumParams(args.l, args.g, args.x0)
        closed = (lambda t: dyn.pendulum_separatrix(p, t)) if p.regime == "separatrix" else (lambda t: dyn.pendulum_oscillatory(p, t))
    closed(0.0)  # regime errors surface before integrating
    tr = dyn.rk4_integrate(dyn.pendulum_field(args.l, args.g), p.initial_state(), args.dt, steps,
                           conserved={"energy": lambda s: dyn.pendulum_energy(args.l, args.g, s)},
                           record_every=args.every)
    x_cf = np.asarray(closed(tr.times))
    x_rk = tr.states[:, 0]
    cols = {
        "t": tr.times,
        "x_closed": x_cf,
        "x_rk4": x_rk,
        "diff": x_cf - x_rk,
        "v_rk4": tr.states[:, 1],
        "energy_drift": tr.conserved["energy"] - tr.conserved["energy"][0],
    }
    summary = {"max_abs_diff": float(np.abs(cols["diff"]).max()), "max_energy_drift": tr.drift()["energy"]}
    return cols, summary


def _traj_euler(args):
    steps = _steps(args)
    lam = tuple(args.lambdas)
    if args.m0 is not None:
        e = dyn.EulerParams.from_state(lam, args.m0)
    elif args.H1 is not None and args.r2 is not None:
        e = dyn.EulerParams(*lam, args.H1, args.r2)
    else:
        raise UsageError("give either --m0 or both --H1 and --r2")
    branch = dyn.euler_top_branch(e)
    s0 = np.array(dyn.euler_top_solution(e, 0.0, branch))
    tr = dyn.rk4_integrate(dyn.euler_field(lam), s0, args.dt, steps, record_every=args.every,
                           conserved={"H1": lambda m: dyn.euler_invariants(lam, m)[0],
                                      "H2": lambda m: dyn.euler_invariants(lam, m)[1]})
    cf = np.array(dyn.euler_top_solution(e, tr.times, branch))
    cols = {"t": tr.times}
    for i in range(3):
        cols[f"m{i + 1}_closed"] = cf[i]
    for i in range(3):
        cols[f"m{i + 1}_rk4"] = tr.states[:, i]
    cols["max_diff"] = np.abs(cf.T - tr.states).max(axis=1)
    cols["H1_drift"] = tr.conserved["H1"] - tr.conserved["H1"][0]
    cols["H2_drift"] = tr.conserved["H2"] - tr.conserved["H2"][0]
    summary = {"case": branch.case, "k": branch.k, "m1_sign": branch.m1_sign,
               "max_abs_diff": float(cols["max_diff"].max()), **{f"max_{n}_drift": v for n, v in tr.drift().items()}}
    return cols, summary


def _traj_family(args):
    steps = _steps(args)
    a, b, c = args.a, args.b, args.c
    tr = dyn.rk4_integrate(dyn.family_field(a, b, c), np.array(args.state), args.dt, steps, record_every=args.every,
                           conserved={"H1": lambda s: dyn.family_invariants(a, b, c, s)[0],
                                      "H2": lambda s: dyn.family_invariants(a, b, c, s)[1]})
    S = tr.states.T
    c1, c2 = dyn.family_invariants(a, b, c, np.array(args.state))
    z, w = dyn.family_curve_point(S)
    cols = {"t": tr.times, "y1": S[0], "y2": S[1], "x1": S[2], "x2": S[3],
            "H1_drift": tr.conserved["H1"] - c1, "H2_drift": tr.conserved["H2"] - c2,
            "quartic_residual": dyn.quartic_residual(dyn.family_quartic_curve(a, b, c, c1, c2), z, w)}
    summary = {**{f"max_{n}_drift": v for n, v in tr.drift().items()},
               "max_quartic_residual": float(np.abs(cols["quartic_residual"]).max())}
    return cols, summary


def _traj_nls(args):
    steps = _steps(args)
    a = args.a
    field = dyn.nls_field(a)
    tr = dyn.rk4_integrate(field, np.array(args.state), args.dt, steps, record_every=args.every,
                           conserved={"H1": lambda s: dyn.nls_spectral_invariants(s, a)[0],
                                      "H2": lambda s: dyn.nls_spectral_invariants(s, a)[1]})
    coeffs = np.array([dyn.spectral_curve_coefficients(s, a) for s in tr.states])
    h = parse_complex(args.h)
    eps = 1e-6
    lax = np.empty(len(tr.states))
    for i, s in enumerate(tr.states):
        v = field(s)
        dA = (dyn.nls_lax_matrices(s + eps * v, a, h).A - dyn.nls_lax_matrices(s - eps * v, a, h).A) / (2 * eps)
        lax[i] = np.abs(dA - dyn.nls_lax_matrices(s, a, h).commutator()).max()
    S = tr.states.T
    cols = {"t": tr.times, "y1": S[0], "y2": S[1], "x1": S[2], "x2": S[3]}
    for j, name in enumerate(("c_h3", "c_h2", "c_h1", "c_h0")):
        cols[name] = coeffs[:, j]
    cols["lax_residual"] = lax
    cols["H1_drift"] = tr.conserved["H1"] - tr.conserved["H1"][0]
    cols["H2_drift"] = tr.conserved["H2"] - tr.conserved["H2"][0]
    spread = np.abs(coeffs - coeffs[0]).max(axis=0) / np.maximum(1.0, np.abs(coeffs[0]))
    summary = {**{f"max_{n}_drift": v for n, v in tr.drift().items()},
               "max_coefficient_spread": float(spread.max()), "max_lax_residual": float(lax.max())}
    return cols, summary


TRAJECTORIES = {"pendulum": _traj_pendulum, "euler": _traj_euler, "family": _traj_family, "nls": _traj_nls}


def cmd_trajectory(args):
    cols, summary = TRAJECTORIES[args.system](args)
    return _table(cols, args.format or "csv", summary), EXIT_OK


# -- parser -------------------------------------------------------------------

def _positive(text):
    v = parse_real(text)
    if not v > 0:
        raise argparse.ArgumentTypeError(f"tolerance must be positive, got {text.strip()!r}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default=argparse.SUPPRESS,
                        help="output format (default: json for reports, csv for trajectories, plain for eval)")
    common.add_argument("--out", metavar="PATH", default=argparse.SUPPRESS, help="write output to PATH instead of stdout")
    common.add_argument("--tol", type=_positive, metavar="FLOAT", default=argparse.SUPPRESS,
                        help="override every tolerance of the identity suites")

    parser = argparse.ArgumentParser(prog="ellipfun", parents=[common], epilog=EPILOG,
                                     formatter_class=argparse.RawDescriptionHelpFormatter,
                                     description="Elliptic functions, integrals and integrable dynamics.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", parents=[common], help="invariants of a lattice", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("omega1", help="first period, re,im")
    p.add_argument("omega2", help="second period, re,im")
    p.set_defaults(handler=cmd_lattice)

    funcs = "; ".join(f"{n} {sig}" for n, (_, _, sig) in EVAL_FUNCTIONS.items())
    p = sub.add_parser("eval", parents=[common], help="evaluate one function",
                       description=f"Functions and arguments: {funcs}.", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("function")
    p.add_argument("params", nargs="*")
    p.set_defaults(handler=cmd_eval)

    p = sub.add_parser("identities", parents=[common], help="run identity self-checks", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("scope", nargs="?", default="all", choices=SCOPES + ("all",))
    p.set_defaults(handler=cmd_identities)

    p = sub.add_parser("trajectory", parents=[common], help="closed form vs RK4 along a trajectory", epilog=EPILOG,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    tsub = p.add_subparsers(dest="system", required=True)

    def traj(name, help_):
        q = tsub.add_parser(name, parents=[common], help=help_)
        q.add_argument("--t-max", type=float, default=10.0)
        q.add_argument("--dt", type=float, default=1e-3)
        q.add_argument("--every", type=int, default=1, help="keep every N-th sample")
        q.set_defaults(handler=cmd_trajectory)
        return q

    q = traj("pendulum", "simple pendulum (oscillatory, separatrix or circulating)")
    q.add_argument("--x0", type=float, default=2.0, help="amplitude; |x0| = pi is the separatrix")
    q.add_argument("--v0", type=float, default=None, help="angular velocity at the bottom (circulating regime)")
    q.add_argument("--l", type=float, default=1.0)
    q.add_argument("--g", type=float, default=9.81)

    q = traj("euler", "torque-free rigid body")
    q.add_argument("--lambdas", type=float, nargs=3, default=[3.0, 2.0, 1.0], metavar=("L1", "L2", "L3"))
    q.add_argument("--m0", type=float, nargs=3, default=None, metavar=("M1", "M2", "M3"))
    q.add_argument("--H1", type=float, default=None)
    q.add_argument("--r2", type=float, default=None)

    q = traj("family", "H = (|x|^2 + a rho + b rho^2 + c rho^3)/2")
    for name, default in (("a", 1.0), ("b", 0.5), ("c", 0.1)):
        q.add_argument(f"--{name}", type=float, default=default)
    q.add_argument("--state", type=float, nargs=4, default=[0.6, -0.2, 0.1, 0.5], metavar=("Y1", "Y2", "X1", "X2"))

    q = traj("nls", "coupled NLS travelling waves with Lax pair")
    q.add_argument("--a", type=float, default=0.5)
    q.add_argument("--state", type=float, nargs=4, default=[0.6, -0.2, 0.1, 0.5], metavar=("Y1", "Y2", "X1", "X2"))
    q.add_argument("--h", default="1,0.5", help="spectral parameter for the Lax residual column, re,im")
    return parser


_NEG_NUMBER = re.compile(r"^-(\d|\.\d)")


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # argparse mistakes '-3.6,2.2' for an option; a leading space makes it positional
    argv = [" " + a if _NEG_NUMBER.match(a) else a for a in argv]
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    for key, default in (("format", None), ("out", None), ("tol", None)):
        if not hasattr(args, key):
            setattr(args, key, default)
    try:
        text, code = args.handler(args)
    except EllipticError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    try:
        _emit(text, args.out)
    except BrokenPipeError:
        sys.stderr.close()
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return code


if __name__ == "__main__":
    sys.exit(main())
