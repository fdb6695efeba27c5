"""Run every bound check at desk scale and write one JSON report per theorem."""

import argparse
import json
import time
from pathlib import Path

from steklov_trees.extremal import reports_to_json, verify

RANGES = {
    "slope": dict(max_n=12),
    "ranch": dict(max_n=12),
    "fell": dict(max_b=5, max_m=5),
    "unit": dict(max_b=5, max_m=5),
    "older": dict(max_b=6, max_m=4),
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out-dir", type=Path, default=Path("results"))
    ap.add_argument("--tol", type=float, default=1e-8)
    args = ap.parse_args()
    args.out_dir.mkdir(parents=True, exist_ok=True)
    summary = {}
    for name, kw in RANGES.items():
        t0 = time.perf_counter()
        reps = verify(name, tol=args.tol, **kw)
        (args.out_dir / f"{name}.json").write_text(reports_to_json(reps))
        failed = [r.query for r in reps if not r.passed]
        summary[name] = {"rows": len(reps), "failed": failed}
        print(f"{name:6s} {len(reps):3d} rows  {len(failed)} failed  {time.perf_counter() - t0:5.1f}s  {' '.join(failed)}")
    (args.out_dir / "summary.json").write_text(json.dumps(summary, indent=2, sort_keys=True) + "\n")


if __name__ == "__main__":
    main()
