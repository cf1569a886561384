#!/usr/bin/env python3
"""Run the shipped suites and write their reports.

Usage:
  python scripts/acceptance.py                       # default + mutation suites
  python scripts/acceptance.py --suite config/suites/smoke.yaml --output-dir benchmark_data/smoke
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path

_PROJECT_ROOT = Path(__file__).resolve().parent.parent
if str(_PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(_PROJECT_ROOT))

DEFAULT_SUITES = ("config/suites/default.yaml", "config/suites/mutation.yaml")


def run_one(path: Path, out_dir: Path) -> bool:
    from src.lab.config import load_suite
    from src.lab.report import emit_json
    from src.lab.runner import suite_run

    suite = load_suite(path)
    start = time.perf_counter()
    result = suite_run(suite, progress=True)
    elapsed = time.perf_counter() - start

    report_path = out_dir / f"{suite.name}.json"
    report_path.write_text(emit_json(result.reports, include_timing=True, extra_summary=result.summary()))
    summary = result.summary()
    print(f"\n  [{suite.name}] {len(result.reports)} reports in {elapsed:.1f}s  ok={summary['ok']}")
    for lemma_id in summary["entries_failed"]:
        print(f"    expectation not met: {lemma_id}")
    print(f"    report: {report_path.resolve()}")
    return result.ok


def main() -> None:
    parser = argparse.ArgumentParser(description="adlv acceptance run")
    parser.add_argument("--suite", action="append", default=None, help="Suite file (repeatable)")
    parser.add_argument("--output-dir", default="benchmark_data/acceptance", help="Where reports are written")
    args = parser.parse_args()

    out_dir = Path(args.output_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    suites = [Path(p) for p in (args.suite or DEFAULT_SUITES)]
    outcomes = {str(p): run_one(p, out_dir) for p in suites}
    with open(out_dir / "summary.json", "w") as f:
        json.dump(outcomes, f, indent=2)
    sys.exit(0 if all(outcomes.values()) else 1)


if __name__ == "__main__":
    main()
