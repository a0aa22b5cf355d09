#!/usr/bin/env python3
"""Full pipeline demo on the bundled fixtures: extract sextuples, score
reviews and products, bucket by feature dimension, and fit the monthly
what-if regression.  Writes everything under the output directory."""

import argparse
import json
from pathlib import Path

from opinionminer.cli import main as cli_main

FIXTURES = Path(__file__).resolve().parent.parent / "tests" / "fixtures"


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="analytics_demo", help="output directory")
    args = parser.parse_args()
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)

    sx = out / "sextuples.jsonl"
    steps = [
        ["extract", str(FIXTURES / "a2400.conllu"), str(FIXTURES / "a2400.meta.jsonl"),
         "--out", str(sx)],
        ["score", str(sx), str(FIXTURES / "a2400.meta.jsonl"),
         "--out", str(out / "scores")],
        ["compare", str(sx), "--out", str(out / "dimensions.csv")],
        ["eval", str(FIXTURES / "a2400.conllu"), str(FIXTURES / "a2400.meta.jsonl"),
         "--out", str(out / "metrics.csv")],
    ]
    for argv in steps:
        rc = cli_main(argv)
        if rc != 0:
            return rc
    print()
    print("sextuples:")
    for line in sx.read_text().splitlines():
        rec = json.loads(line)
        print(f"  {rec['feature']} / {rec['opinion']} / {rec['intensifier']}"
              f"  scalar={rec['scalar']:+.4f}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
