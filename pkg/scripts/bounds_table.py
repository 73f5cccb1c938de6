"""Tabulate the subset-sum threshold c alongside its quadratic upper
bound and the recursive union-level values, as CSV.

    python3 scripts/bounds_table.py --ns 1:8 --pairs 2:1,2:2,3:1 --out c.csv
"""

import argparse

from thinlab.bounds import build_c_table, cubic_image_min


def int_range(spec: str) -> list[int]:
    if ":" in spec:
        lo, hi = spec.split(":")
        return list(range(int(lo), int(hi) + 1))
    return [int(s) for s in spec.split(",")]


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--ns", default="1:8", help="thresholds, lo:hi or comma list"
    )
    parser.add_argument(
        "--pairs",
        default="2:1,2:2",
        help="n:k pairs for the recursive bound (default: 2:1,2:2)",
    )
    parser.add_argument(
        "--entry-bound", type=int, default=3, help="search entry bound"
    )
    parser.add_argument("--out", default=None, help="CSV destination")
    parser.add_argument(
        "--show-minima",
        action="store_true",
        help="also print the minimizing vector for each length",
    )
    args = parser.parse_args()

    ns = int_range(args.ns)
    pairs = [
        (int(a), int(b))
        for a, b in (p.split(":") for p in args.pairs.split(",") if p)
    ]
    table = build_c_table(ns, pairs, entry_bound=args.entry_bound)
    csv = table.to_csv()
    print(csv, end="")
    if args.show_minima:
        for n, c in table.c_exact:
            res = cubic_image_min(c, args.entry_bound)
            print(f"# c({n}) = {c}: min image {res.min_image_size} at {res.argmin}")
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(csv)
        print(f"# wrote {args.out}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
