#!/usr/bin/env python3
"""Run every axiom audit in both reduction variants and print a table.

Each audit searches seeded random models (and action models, where the
schema needs one) for a state where the two sides of the axiom disagree.
The sound variant should survive the whole table; the paper variant of the
universal and agency reduction rules should each produce a verified
counterexample.

Run:  python3 scripts/audit_axioms.py [--samples N] [--seed N]
"""
from __future__ import annotations

import argparse
import json

from hohfeld.generators import GeneratorConfig
from hohfeld.reduction import AXIOMS, VARIANTS, audit_axiom


def main() -> None:
    cli = argparse.ArgumentParser(description=__doc__)
    cli.add_argument("--samples", type=int, default=GeneratorConfig().sample_count)
    cli.add_argument("--seed", type=int, default=GeneratorConfig().seed)
    cli.add_argument("--show-counterexamples", action="store_true",
                     help="print full counterexample JSON, not just the summary")
    args = cli.parse_args()
    cfg = GeneratorConfig(seed=args.seed, sample_count=args.samples)

    header = f"{'axiom':<12} {'variant':<8} {'result':<16} detail"
    print(header)
    print("-" * len(header))
    found = []
    for name in sorted(AXIOMS):
        for variant in VARIANTS:
            report = audit_axiom(name, cfg, variant)
            if report is None:
                print(f"{name:<12} {variant:<8} {'none':<16}")
                continue
            detail = (f"sample {report.sample_index}, state {report.state}, "
                      f"lhs={report.lhs_value} rhs={report.rhs_value}")
            print(f"{name:<12} {variant:<8} {'counterexample':<16} {detail}")
            found.append(report)

    if args.show_counterexamples:
        for report in found:
            print()
            print(json.dumps(report.to_json_dict(), indent=2))


if __name__ == "__main__":
    main()
