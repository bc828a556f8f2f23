"""Command-line front end: time-sweep, max-sweep and identity-check.

Examples:
    qdchain time-sweep --q 1 --q 1.05 --q 1.2 --out fig_time.csv
    qdchain time-sweep --root-of-unity 3 --root-of-unity 5 --out fig_root.csv
    qdchain max-sweep --q 1.2 --steps 4001 --out fig_max.csv
    qdchain identity-check --n-max 9
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .deformation import DeformationParameter, RealQ, RootOfUnity
from .operators import CustomProfile, PSTProfile
from .sweeps import SweepConfig, run_identity_check, run_max_fidelity_sweep, run_time_sweep


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _add_sweep_arguments(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--sites", type=int, default=10, help="chain length n+1 (default 10)")
    sub.add_argument("--dim", type=int, default=3, help="qudit levels D (default 3)")
    sub.add_argument(
        "--q",
        type=float,
        action="append",
        default=[],
        metavar="Q",
        help="real deformation parameter, repeatable",
    )
    sub.add_argument(
        "--root-of-unity",
        type=int,
        action="append",
        default=[],
        metavar="D",
        help="root-of-unity order d for q = exp(i*pi/d), repeatable",
    )
    sub.add_argument("--t-min", type=float, default=0.0)
    sub.add_argument("--t-max", type=float, default=SweepConfig.__dataclass_fields__["t_max"].default)
    sub.add_argument("--steps", type=int, default=2001)
    sub.add_argument("--lambda", dest="lam", type=float, default=1.0, help="coupling scale")
    sub.add_argument(
        "--couplings",
        type=str,
        default=None,
        metavar="J1,J2,...",
        help="explicit per-bond couplings (overrides --lambda)",
    )
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--out", type=Path, required=True, help="output CSV path")


def _build_config(args: argparse.Namespace) -> SweepConfig:
    deformations: list[DeformationParameter] = [RealQ(q) for q in args.q]
    deformations += [RootOfUnity(d) for d in args.root_of_unity]
    if not deformations:
        raise ValueError("deformations: give at least one --q or --root-of-unity")
    if args.couplings is not None:
        values = tuple(float(v) for v in args.couplings.split(","))
        profile = CustomProfile(values)
    else:
        profile = PSTProfile(args.lam)
    return SweepConfig(
        deformations=tuple(deformations),
        out=args.out,
        sites=args.sites,
        dim=args.dim,
        t_min=args.t_min,
        t_max=args.t_max,
        steps=args.steps,
        profile=profile,
        seed=args.seed,
    )


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="qdchain",
        description="State transfer sweeps for chains of q-deformed oscillators",
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    time_sweep = subparsers.add_parser("time-sweep", help="fidelity versus lambda*t")
    _add_sweep_arguments(time_sweep)

    max_sweep = subparsers.add_parser("max-sweep", help="best fidelity and optimal time per deformation")
    _add_sweep_arguments(max_sweep)

    identity = subparsers.add_parser("identity-check", help="collective-spin rotation identity residuals")
    identity.add_argument("--n-max", type=_positive_int, default=9)

    args = parser.parse_args(argv)

    if args.command == "identity-check":
        report = run_identity_check(args.n_max)
        print("\n".join(report.lines()))
        return 0 if report.passed else 1

    try:
        config = _build_config(args)
        runner = run_time_sweep if args.command == "time-sweep" else run_max_fidelity_sweep
        path = runner(config)
    except ValueError as exc:
        print(f"qdchain: error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"qdchain: cannot write output: {exc}", file=sys.stderr)
        return 1
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
