"""Walk the escalation chain from {2**n} and print each stage.

Every stage is emitted as a DSL expression that `thinlab classify` accepts
verbatim, so the chain can be replayed or extended from the shell:

    python3 scripts/escalation_demo.py --stages 5 --export chain.txt
    thinlab classify "$(sed -n '3p' chain.txt)"
"""

import argparse
import time

from thinlab.bounds import escalate
from thinlab.dsl import format_set
from thinlab.engine import Engine, ExactLevel
from thinlab.symbolic import geo


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument(
        "--stages", type=int, default=5, help="chain length (default: 5)"
    )
    parser.add_argument(
        "--export", default=None, help="write one DSL expression per line"
    )
    args = parser.parse_args()

    engine = Engine()
    a = geo(2, 1, 0, 0)
    expressions = []
    for stage in range(args.stages):
        expr = format_set(a)
        expressions.append(expr)
        t0 = time.perf_counter()
        verdict = engine.classify(a)
        elapsed = time.perf_counter() - t0
        assert isinstance(verdict, ExactLevel)
        print(f"stage {stage}: level {verdict.level}  ({elapsed * 1000:.1f} ms)")
        print(f"  {expr}")
        if stage + 1 < args.stages:
            a = escalate(a, engine)

    if args.export:
        with open(args.export, "w") as fh:
            fh.write("\n".join(expressions) + "\n")
        print(f"wrote {len(expressions)} expressions to {args.export}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
