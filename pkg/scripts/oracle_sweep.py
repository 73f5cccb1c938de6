"""Exhaustive oracle tables for a batch of small groups, cross-checked
against the classification engine.

    python3 scripts/oracle_sweep.py --out tables/
"""

import argparse
import os

from thinlab.cli import _parse_group
from thinlab.ideals import SizeAtMost
from thinlab.oracle import build_table, cross_check


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--groups",
        default="z3,z5,z7,b2,b3",
        help="comma-separated group names (default: z3,z5,z7,b2,b3)",
    )
    parser.add_argument(
        "--t",
        default="0,1,2",
        help="comma-separated size bounds (default: 0,1,2)",
    )
    parser.add_argument(
        "--out", default=".", help="output directory (default: current)"
    )
    args = parser.parse_args()

    os.makedirs(args.out, exist_ok=True)
    names = [s.strip() for s in args.groups.split(",") if s.strip()]
    bounds = [int(s) for s in args.t.split(",")]
    failures = 0
    for name in names:
        group = _parse_group(name)
        for t in bounds:
            table = build_table(group, SizeAtMost(group, t))
            report = cross_check(table)
            stem = os.path.join(args.out, f"oracle_{name}_t{t}")
            with open(stem + ".csv", "w") as fh:
                fh.write(table.to_csv())
            with open(stem + ".json", "w") as fh:
                fh.write(table.to_json() + "\n")
            bottoms = sum(1 for v in table.levels if v < 0)
            print(
                f"{name} t={t}: max level {table.max_level()}, "
                f"{bottoms} bottom, {report.summary()}"
            )
            if not report.ok:
                failures += 1
    if failures:
        print(f"{failures} cross-check failures")
        return 1
    print("all tables agree with the engine")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
