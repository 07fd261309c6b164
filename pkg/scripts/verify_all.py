"""Run every verification report and write them as JSON under results/."""

import argparse
import time
from pathlib import Path

from redalg import drsl2, weylmod
from redalg.cli import center_report, confluence_report, module_report, pbw_report
from redalg.report import Report


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--out", type=Path, default=Path("results"))
    args = ap.parse_args()

    pres = drsl2.build().presentation
    jobs = {
        "center": center_report,
        "confluence": lambda: confluence_report(pres),
        "pbw": lambda: pbw_report(pres, 4),
        "module": lambda: module_report(args.seed, 100, 3),
        "prop2": weylmod.prop2_report,
        "graded_symbol": drsl2.graded_symbol_check,
        "zero_divisor": lambda: drsl2.zero_divisor_probe(args.seed, 200, 3),
    }
    args.out.mkdir(parents=True, exist_ok=True)
    ok = True
    for name, job in jobs.items():
        t0 = time.perf_counter()
        rep: Report = job()
        dt = time.perf_counter() - t0
        (args.out / f"{name}.json").write_text(rep.to_json() + "\n")
        print(f"{'PASS' if rep.passed else 'FAIL'}  {name:<14} {len(rep.checks):>3} checks  {dt:6.2f}s")
        ok &= rep.passed
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
