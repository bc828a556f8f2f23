#!/usr/bin/env python3
"""Regenerate the four golden sweep CSVs consumed by the figure renderer.

Chain of 10 sites, qutrit encoding, transfer-tuned couplings:
  fig1: fidelity vs lambda*t for real q in {1, 1.05, 1.2}
  fig2: max fidelity and optimal time vs real q
  fig3: fidelity vs lambda*t for q = exp(i*pi/d), several d, q=1 reference
  fig4: max fidelity and optimal time vs root order d = 3..50, q=1 reference
"""

import argparse
from pathlib import Path

from qdchain import RealQ, RootOfUnity, SweepConfig, run_max_fidelity_sweep, run_time_sweep


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--out-dir",
        type=Path,
        default=Path(__file__).resolve().parents[1] / "data" / "golden",
        help="where to write the CSVs (default data/golden)",
    )
    args = parser.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)

    real_grid = tuple(RealQ(round(0.70 + 0.02 * k, 2)) for k in range(36))
    jobs = [
        (
            run_time_sweep,
            "fig1_fidelity_vs_time_real_q.csv",
            {"deformations": (RealQ(1.0), RealQ(1.05), RealQ(1.2)), "steps": 1001},
        ),
        (
            run_max_fidelity_sweep,
            "fig2_max_fidelity_vs_q.csv",
            {"deformations": real_grid, "steps": 2001},
        ),
        (
            run_time_sweep,
            "fig3_fidelity_vs_time_root_of_unity.csv",
            {
                "deformations": (
                    RootOfUnity(3),
                    RootOfUnity(4),
                    RootOfUnity(5),
                    RootOfUnity(10),
                    RootOfUnity(50),
                    RealQ(1.0),
                ),
                "steps": 1001,
            },
        ),
        (
            run_max_fidelity_sweep,
            "fig4_max_fidelity_vs_root_order.csv",
            {
                "deformations": tuple(RootOfUnity(d) for d in range(3, 51)) + (RealQ(1.0),),
                "steps": 2001,
            },
        ),
    ]
    for runner, name, kwargs in jobs:
        path = runner(SweepConfig(out=args.out_dir / name, sites=10, dim=3, **kwargs))
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
