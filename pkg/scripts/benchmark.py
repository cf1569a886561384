#!/usr/bin/env python3
"""Kernel benchmark: length, Bruhat order and the two Adm(lambda) constructions.

Usage:
  python scripts/benchmark.py --types A2,B2,A3 --radius 8 --trials 5
  python scripts/benchmark.py --types D4 --lambda 1,0,0,0 --output benchmark_data/d4.json
"""

from __future__ import annotations

import argparse
import json
import math
import statistics
import sys
import time
from pathlib import Path

# Ensure project root is on sys.path so imports work regardless of cwd.
_PROJECT_ROOT = Path(__file__).resolve().parent.parent
if str(_PROJECT_ROOT) not in sys.path:
    sys.path.insert(0, str(_PROJECT_ROOT))


def compute_stats(values: list[float]) -> dict:
    """Median, IQR, min, max and p95 of a list of timings in ms."""
    if not values:
        return {"median": None, "iqr": None, "min": None, "max": None, "p95": None, "n": 0}
    s = sorted(values)

    def _percentile(p: float) -> float:
        k = (p / 100.0) * (len(s) - 1)
        f, c = math.floor(k), math.ceil(k)
        if f == c:
            return s[int(k)]
        return s[f] * (c - k) + s[c] * (k - f)

    q1, q3 = _percentile(25), _percentile(75)
    return {
        "median": round(statistics.median(s), 3),
        "iqr": round(q3 - q1, 3),
        "min": round(s[0], 3),
        "max": round(s[-1], 3),
        "p95": round(_percentile(95), 3),
        "n": len(s),
    }


def _time_ms(fn) -> tuple[float, object]:
    start = time.perf_counter()
    out = fn()
    return (time.perf_counter() - start) * 1000.0, out


def bench_type(type_spec: str, radius: int, lam: tuple[int, ...] | None, trials: int) -> dict:
    from src.affine.group import affine_group
    from src.bruhat.admissible import adm_by_ball_filter, adm_set
    from src.bruhat.order import BruhatOrder
    from src.rootdata.parse import build_root_datum

    datum = build_root_datum(type_spec)
    group = affine_group(datum)
    lam = lam if lam is not None else datum.dominant_up_to_height(2)[-1]
    timings: dict[str, list[float]] = {"ball": [], "length": [], "inversions": [], "adm_closure": [], "adm_ball": []}
    sizes: dict[str, int] = {}
    for _ in range(trials):
        ms, ball = _time_ms(lambda: group.ball(radius))
        timings["ball"].append(ms)
        sizes["ball"] = len(ball)
        timings["length"].append(_time_ms(lambda: [group.length(x) for x in ball])[0])
        timings["inversions"].append(_time_ms(lambda: [group.inversion_count(x) for x in ball])[0])
        ms, aset = _time_ms(lambda: adm_set(group, lam, BruhatOrder(group)))
        timings["adm_closure"].append(ms)
        sizes["adm"] = len(aset)
        ms, filtered = _time_ms(lambda: adm_by_ball_filter(group, lam, BruhatOrder(group)))
        timings["adm_ball"].append(ms)
        if frozenset(aset.elements) != filtered:
            print(f"  [{type_spec}] Adm constructions disagree for lambda={lam}", file=sys.stderr)
    return {
        "type": datum.label,
        "lambda": list(lam),
        "radius": radius,
        "sizes": sizes,
        "metrics": {name: compute_stats(values) for name, values in timings.items()},
    }


def main() -> None:
    parser = argparse.ArgumentParser(
        description="adlv kernel benchmark",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--types", default="A2,B2,A3", help="Comma-separated datum specs")
    parser.add_argument("--radius", type=int, default=8, help="Ball radius for length timings")
    parser.add_argument("--lambda", dest="lam", default=None, help="Coweight for Adm (default: highest of height 2)")
    parser.add_argument("--trials", type=int, default=5, help="Trials per type")
    parser.add_argument("--output", default=None, help="Write the JSON summary here")
    args = parser.parse_args()

    lam = tuple(int(c) for c in args.lam.split(",")) if args.lam else None
    results = []
    for type_spec in [t.strip() for t in args.types.split(",") if t.strip()]:
        result = bench_type(type_spec, args.radius, lam, args.trials)
        results.append(result)
        print(f"\n  [{result['type']}] |ball|={result['sizes']['ball']}  |Adm|={result['sizes']['adm']}")
        for metric, stats in result["metrics"].items():
            print(f"    {metric}: median={stats['median']}ms  IQR={stats['iqr']}ms  p95={stats['p95']}ms")

    if args.output:
        out = Path(args.output)
        out.parent.mkdir(parents=True, exist_ok=True)
        with open(out, "w") as f:
            json.dump({"results": results}, f, indent=2)
        print(f"\nSummary written to {out.resolve()}")


if __name__ == "__main__":
    main()
