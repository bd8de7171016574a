"""Command-line front end.

Subcommands: classify, scan, profile, verify, causality.  Exit codes:
0 success (including honest non-convergence verdicts), 1 verification
failure, 2 usage/domain error, 3 I/O error, 4 internal numerical failure.
"""

from __future__ import annotations

import argparse
import sys

from . import classification as cls
from .equilibria import rest_points
from .errors import (
    DegenerateShock,
    EpsilonAboveHat,
    EpsilonOutOfRange,
    NonPositiveParameter,
    ParamsOutOfOmega,
    QOutOfRange,
    RadshockError,
    StateOutsideDomain,
    ZOutOfRange,
)
from .model import causality_check
from .scan import ScanConfig, render_scan, run_scan
from .shooting import ShootOptions, shoot
from .verify import format_report, run_identity_suite

_DOMAIN_ERRORS = (
    ParamsOutOfOmega,
    QOutOfRange,
    EpsilonOutOfRange,
    ZOutOfRange,
    NonPositiveParameter,
    DegenerateShock,
    EpsilonAboveHat,
    StateOutsideDomain,
)

_g = lambda x: format(float(x), ".17g")  # noqa: E731


def _parse_grid(text: str) -> tuple[int, int]:
    try:
        a, b = text.lower().split("x")
        return int(a), int(b)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"grid must look like 200x200, got {text!r}") from exc


def _shoot_options(args) -> ShootOptions:
    kwargs = {}
    if args.offset is not None:
        kwargs["offset"] = args.offset
    if args.rtol is not None:
        kwargs["rel_tol"] = args.rtol
    if args.atol is not None:
        kwargs["abs_tol"] = args.atol
    return ShootOptions(**kwargs)


def cmd_classify(args) -> int:
    # Human-facing report: 12 significant digits.  The 17-digit contract
    # applies to the CSV/JSON data emitters.
    label = cls.classify(args.eps, args.q)
    pair = rest_points(args.q)
    lam = cls.local_spectrum(pair.psi_plus, args.eps)
    print(f"region: {label.value}")
    print(f"eps: {args.eps:.12g}  q_tilde: {args.q:.12g}")
    print(f"v_minus_sq: {pair.v_minus_sq:.12g}  v_plus_sq: {pair.v_plus_sq:.12g}")
    print(f"psi_minus: ({pair.psi_minus.psi0:.12g}, {pair.psi_minus.psi1:.12g})")
    print(f"psi_plus:  ({pair.psi_plus.psi0:.12g}, {pair.psi_plus.psi1:.12g})")
    print(f"eigenvalues at psi_plus: {lam[0]:.12g} {lam[1]:.12g}")
    print(f"separatrix q1(eps): {cls.separatrix_q1(args.eps):.12g}")
    if args.eps < cls.epsilon_hat():
        print(f"separatrix q2(eps): {cls.separatrix_q2(args.eps):.12g}")
    return 0


def cmd_scan(args) -> int:
    eps_count, q_count = args.grid
    config = ScanConfig(
        eps_lo=args.eps_min,
        eps_hi=args.eps_max,
        eps_count=eps_count,
        q_lo=args.q_min,
        q_hi=args.q_max,
        q_count=q_count,
        shoot=args.shoot,
        fmt=args.format,
    )
    result = run_scan(config, _shoot_options(args) if args.shoot else None)
    text = render_scan(result)
    out = args.out or f"scan.{args.format}"
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 3
    counts: dict[str, int] = {}
    for r in result.records:
        counts[r.region] = counts.get(r.region, 0) + 1
    print(f"wrote {out}: {len(result.records)} records, regions {counts}")
    return 0


def cmd_profile(args) -> int:
    result = shoot(args.eps, args.q, _shoot_options(args))
    kin = result.kinematics_array()
    lines = ["pseudo_time,psi0,psi1,theta,u,v"]
    for i, t in enumerate(result.times):
        lines.append(
            f"{_g(t)},{_g(result.states[i, 0])},{_g(result.states[i, 1])},"
            f"{_g(kin[i, 0])},{_g(kin[i, 1])},{_g(kin[i, 2])}"
        )
    out = args.out or "profile.csv"
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        print(f"error: cannot write {out}: {exc}", file=sys.stderr)
        return 3
    rep = result.oscillation
    print(f"verdict: {result.verdict.value}")
    print(f"oscillatory: {'true' if rep.oscillatory else 'false'}")
    names = {"psi": ("psi0", "psi1"), "theta_v": ("theta", "v"), "u_v": ("u", "v")}
    for system, comps in rep.systems.items():
        parts = [
            f"{name}: extrema={c.extrema} sign_changes={c.sign_changes}"
            for name, c in zip(names[system], comps)
        ]
        flag = "true" if rep.oscillatory_by_system[system] else "false"
        print(f"system {system}: {'; '.join(parts)}; oscillatory={flag}")
    print(f"samples: {result.times.size}  trajectory: {out}")
    return 0


def cmd_verify(args) -> int:
    checks = run_identity_suite(samples=args.samples)
    print(format_report(checks))
    return 0 if all(c.passed for c in checks) else 1


def cmd_causality(args) -> int:
    verdict = causality_check(args.eta, args.mu, args.nu)
    if verdict.epsilon is None:
        print(verdict.klass.value)
    else:
        print(f"{verdict.klass.value}  eps: {verdict.epsilon:.12g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radshock",
        description="Phase-plane classification and shock-profile shooting "
        "for the sharply-causal radiation-fluid model.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify one (eps, q_tilde) point")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("scan", help="sweep the parameter square")
    p.add_argument("--grid", type=_parse_grid, default=(100, 100), metavar="NxM",
                   help="eps count x q count (default 100x100)")
    p.add_argument("--format", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--out", default=None, help="output path (default scan.<format>)")
    p.add_argument("--shoot", action="store_true", help="also shoot a profile per cell")
    p.add_argument("--eps-min", type=float, default=1e-6)
    p.add_argument("--eps-max", type=float, default=1.0)
    p.add_argument("--q-min", type=float, default=0.75 + 1e-6)
    p.add_argument("--q-max", type=float, default=1.0 - 1e-6)
    p.add_argument("--offset", type=float, default=None)
    p.add_argument("--rtol", type=float, default=None)
    p.add_argument("--atol", type=float, default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("profile", help="shoot one heteroclinic profile")
    p.add_argument("--eps", type=float, required=True)
    p.add_argument("--q", type=float, required=True)
    p.add_argument("--out", default=None, help="trajectory CSV path (default profile.csv)")
    p.add_argument("--offset", type=float, default=None)
    p.add_argument("--rtol", type=float, default=None)
    p.add_argument("--atol", type=float, default=None)
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("verify", help="run the closed-form identity suite")
    p.add_argument("--samples", type=int, default=4000)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("causality", help="classify transport coefficients")
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--mu", type=float, required=True)
    p.add_argument("--nu", type=float, required=True)
    p.set_defaults(func=cmd_causality)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _DOMAIN_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except RadshockError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
