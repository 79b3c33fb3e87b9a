"""Command-line interface.

Exit codes: 0 success, 1 a verification failed, 2 usage or configuration
error.
"""

import argparse
import json
import sys

import numpy as np

from . import fileformat as ff
from .bench import DENSE_LIMIT, CapacityError, bench_one, cross_check
from .kernels import ConfigurationError, SignPattern, build_k, build_xi, verify_xi
from .linalg import ShapeError
from .phase_space import check_dim
from .states import (
    PAULI, DomainError, bloch_density, density_violations, mixed_state, momentum_state,
    position_state, wigner_extrema_scan,
)
from .verification import faulty_xi, run_suite
from .wigner import marginals, phase_point_ops, reconstruct, wigner_map

SIGNS_HELP = (
    "sign pattern: 'default' (all +), 'paper-qubit' (all -), or an explicit "
    "string of '+'/'-', one per free slot. Slot order is lexicographic over "
    "conjugate-pair representatives (q0, p0) < (N-q0, N-p0), with the "
    "self-conjugate point (N/2, N/2) last for even N."
)


class UsageError(Exception):
    pass


def parse_n_list(text):
    """``"4"``, ``"2..8"`` or ``"2,3,5"`` to a list of dimensions."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(int(lo), int(hi) + 1))
        elif part:
            out.append(int(part))
    if not out:
        raise UsageError(f"empty dimension list {text!r}")
    return [check_dim(n) for n in out]


def parse_state(spec, n):
    kind, _, arg = spec.partition(":")
    if kind == "position":
        return position_state(int(arg), n)
    if kind == "momentum":
        return momentum_state(int(arg), n)
    if kind == "mixed" and not arg:
        return mixed_state(n)
    if kind == "bloch":
        if n != 2:
            raise DomainError("Bloch states require --n 2")
        try:
            a = [float(x) for x in arg.split(",")]
        except ValueError:
            raise UsageError(f"malformed Bloch vector {arg!r}") from None
        return bloch_density(a)
    try:
        header, rho = ff.load(spec, ff.MATRIX)
    except FileNotFoundError:
        raise UsageError(
            f"invalid state {spec!r}: expected position:q, momentum:p, mixed, "
            "bloch:a1,a2,a3 or a matrix file") from None
    if rho.shape != (n, n):
        raise ShapeError(f"state file is {rho.shape[0]}x{rho.shape[1]}, expected {n}x{n}")
    return rho


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _signs(args, n):
    return SignPattern.parse(n, args.signs)


def cmd_kernel(args):
    n = check_dim(args.n)
    k = build_k(n)
    if args.dense:
        if n > DENSE_LIMIT:
            raise CapacityError(f"--dense is limited to n <= {DENSE_LIMIT}; use the generator form")
        _emit(ff.dumps(ff.KERNEL, n, k.dense(), layout="dense"), args.out)
    else:
        _emit(ff.dumps(ff.KERNEL, n, k.generator, layout="generator"), args.out)
    return 0


def cmd_xi(args):
    n = check_dim(args.n)
    signs = _signs(args, n)
    xi = build_xi(n, signs)
    meta = {}
    status = 0
    if args.verify:
        if n > DENSE_LIMIT:
            raise CapacityError(f"--verify is limited to n <= {DENSE_LIMIT}")
        report = verify_xi(xi, args.tol)
        meta["report"] = report.as_dict()
        status = 0 if report.passed else 1
    if args.dense:
        if n > DENSE_LIMIT:
            raise CapacityError(f"--dense is limited to n <= {DENSE_LIMIT}")
        _emit(ff.dumps(ff.XI, n, xi.dense(), signs=signs, layout="dense", **meta), args.out)
    else:
        _emit(ff.dumps(ff.XI, n, xi.generator, signs=signs, layout="generator", **meta), args.out)
    return status


def cmd_wigner(args):
    n = check_dim(args.n)
    signs = _signs(args, n)
    rho = parse_state(args.state, n)
    w = wigner_map(rho, build_xi(n, signs))
    if not hasattr(w, "values"):
        raise DomainError("state operator is not hermitian; only hermitian inputs have a real Wigner table")
    if args.format == "csv":
        text = ff.wigner_csv(w.values, signs)
        if args.marginals:
            pos, mom = marginals(w)
            text += "# position," + ",".join(f"{x:.16e}" for x in pos) + "\n"
            text += "# momentum," + ",".join(f"{x:.16e}" for x in mom) + "\n"
    else:
        meta = {"imag_residue": w.imag_residue}
        if args.marginals:
            pos, mom = marginals(w)
            meta["position_marginal"] = pos.tolist()
            meta["momentum_marginal"] = mom.tolist()
        text = ff.dumps(ff.WIGNER, n, w.values, signs=signs, real=True, **meta)
    _emit(text, args.out)
    return 0


def cmd_phase_points(args):
    n = check_dim(args.n)
    if n > DENSE_LIMIT:
        raise CapacityError(f"phase-point dumps are limited to n <= {DENSE_LIMIT}")
    signs = _signs(args, n)
    pts = phase_point_ops(build_xi(n, signs))
    _emit(ff.dumps(ff.PHASE_POINTS, n, pts.operators, signs=signs, index="[q][p][row][col]"), args.out)
    return 0


def cmd_verify(args):
    ns = parse_n_list(args.n)
    results = []
    ok = True
    for n in ns:
        signs = _signs(args, n)
        xi = faulty_xi(n, signs) if args.inject_fault else None
        report = run_suite(n, signs, args.trials, args.seed, args.tol, xi=xi)
        ok &= report.passed
        results.append({"n": n, "signs": signs.to_string(), **report.as_dict()})
        if not args.json:
            mark = "PASS" if report.passed else "FAIL"
            print(f"n={n:<3d} {mark}  max residual {report.max_residual:.3e}")
            for c in report.checks:
                if args.verbose or not c.passed:
                    print(f"    {'ok  ' if c.passed else 'FAIL'} {c.name:<32s} {c.residual:.3e}")
    if args.json:
        print(json.dumps({"format": ff.REPORT, "passed": ok, "results": results}, indent=1))
    return 0 if ok else 1


def cmd_reconstruct(args):
    n = check_dim(args.n)
    signs = _signs(args, n)
    values = ff.read_wigner_file(args.wigner_file)
    if values.shape != (n, n):
        raise ShapeError(f"Wigner table is {values.shape[0]}x{values.shape[1]}, expected {n}x{n}")
    rho = reconstruct(values, phase_point_ops(build_xi(n, signs)))
    v = density_violations(rho)
    if v["hermiticity"] > 1e-10 or v["trace"] > 1e-10 or v["min_probe"] < -1e-10:
        print(f"warning: reconstructed operator is not a valid density matrix "
              f"(trace error {v['trace']:.3e}, min probe {v['min_probe']:.3e})", file=sys.stderr)
    _emit(ff.dumps(ff.MATRIX, n, rho, signs=signs), args.out)
    return 0


def cmd_bench(args):
    rows = [bench_one(n, args.mode, args.seed, args.repeat) for n in parse_n_list(args.n_list)]
    check = cross_check(8, args.seed)
    if args.json:
        print(json.dumps({"rows": rows, "cross_check": check}, indent=1))
        return 0
    print(f"{'n':>5} {'mode':>9} {'build K [s]':>12} {'build xi [s]':>13} {'apply K [s]':>12}  extra")
    for r in rows:
        extra = f"xi^2 residual {r['xi_squared_residual']:.2e}" if "xi_squared_residual" in r else ""
        print(f"{r['n']:>5} {r['mode']:>9} {r['build_k_s']:>12.3e} {r['build_xi_s']:>13.3e} "
              f"{r['apply_k_s']:>12.3e}  {extra}")
    print(f"generator vs dense at n=8: K {check['k_entries']:.1e}, xi {check['xi_entries']:.1e}, "
          f"K f {check['k_apply']:.1e}")
    return 0


def _fmt_matrix(m, scale=1.0):
    rows = []
    for row in np.asarray(m) * scale:
        rows.append("  [" + ", ".join(f"{z.real:+.4g}{z.imag:+.4g}i" for z in row) + "]")
    return "\n".join(rows)


def cmd_qubit_demo(args):
    k = build_k(2)
    xi = build_xi(2, "paper-qubit")
    pts = phase_point_ops(xi)
    print("K_l, rows/columns (q,p) = (0,0),(0,1),(1,0),(1,1):")
    print(_fmt_matrix(k.dense()))
    print("\nxi ('paper-qubit' signs), times 2*sqrt(2):")
    print(_fmt_matrix(xi.dense(), 2 * np.sqrt(2)))
    print("\nPhase-point operators W(q,p) in the position basis.")
    print("Note: labels follow the marginal rule sum_p W(q,p) = 2|q><q|; the")
    print("commonly displayed table lists W(0,1) and W(1,0) swapped, i.e. shows W(p,q).")
    for q in range(2):
        for p in range(2):
            print(f"W({q},{p}) =")
            print(_fmt_matrix(pts[q, p]))
    print("\nBloch state rho = (I + a.sigma)/2: W(q,p) = (1 + c.a)/4 with c =")
    for q in range(2):
        for p in range(2):
            c = np.einsum("kab,ba->k", PAULI, pts[q, p]).real
            print(f"  (q,p)=({q},{p}): c = ({c[0]:+.0f}, {c[1]:+.0f}, {c[2]:+.0f})")
    scan = wigner_extrema_scan(xi, resolution=(args.theta, args.phi))
    print(f"\nextrema over the Bloch sphere: max {scan.max_value:.12f}, min {scan.min_value:.12f}")
    print(f"  (1+sqrt3)/4 = {(1 + np.sqrt(3)) / 4:.12f}, (1-sqrt3)/4 = {(1 - np.sqrt(3)) / 4:.12f}")
    for label, pts_ in (("argmax", scan.argmax), ("argmin", scan.argmin)):
        print(f"  {label}: " + "; ".join(f"({a.a1:+.4f}, {a.a2:+.4f}, {a.a3:+.4f})" for a in pts_))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(prog="finitewigner", description="Discrete Wigner functions for N-level systems.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_signs(p):
        p.add_argument("--signs", default="default", help=SIGNS_HELP)

    p = sub.add_parser("kernel", help="write K_l (generator or dense)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dense", action="store_true", help=f"dense N^2 x N^2 matrix (n <= {DENSE_LIMIT})")
    p.add_argument("--out")
    p.set_defaults(func=cmd_kernel)

    p = sub.add_parser("xi", help="write the square-root kernel xi")
    p.add_argument("--n", type=int, required=True)
    add_signs(p)
    p.add_argument("--dense", action="store_true")
    p.add_argument("--verify", action="store_true", help="embed a verification report")
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_xi)

    p = sub.add_parser("wigner", help="Wigner table of a state")
    p.add_argument("--n", type=int, required=True)
    add_signs(p)
    p.add_argument("--state", required=True,
                   help="position:q | momentum:p | mixed | bloch:a1,a2,a3 (n=2) | path to a matrix file")
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--marginals", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_wigner)

    p = sub.add_parser("phase-points", help="dump all phase-point operators")
    p.add_argument("--n", type=int, required=True)
    add_signs(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_phase_points)

    p = sub.add_parser("verify", help="run the full identity suite")
    p.add_argument("--n", default="2..8", help="dimension, range a..b, or comma list")
    add_signs(p)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--json", action="store_true")
    p.add_argument("-v", "--verbose", action="store_true")
    p.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("reconstruct", help="operator from a Wigner table")
    p.add_argument("--n", type=int, required=True)
    add_signs(p)
    p.add_argument("--wigner-file", required=True)
    p.add_argument("--out")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("bench", help="construction/application timings")
    p.add_argument("--n-list", default="8,16,32,64,128,256,512")
    p.add_argument("--mode", choices=("generator", "dense"), default="generator")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("qubit-demo", help="reproduce the N=2 construction")
    p.add_argument("--theta", type=int, default=721)
    p.add_argument("--phi", type=int, default=1440)
    p.set_defaults(func=cmd_qubit_demo)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ConfigurationError, CapacityError, DomainError, ShapeError,
            ff.FormatError, ValueError, IndexError, TypeError) as exc:
        print(f"finitewigner {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
