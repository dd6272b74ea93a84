"""Exhaustive least-eigenvalue check over a grid of (n, kappa).

Writes grid.json (full report), grid.csv and, unless --no-claims, claims.json
with the structural claims evaluated on every minimizer.

    python3 scripts/run_grid.py --n-min 4 --n-max 7 --jobs 2
    python3 scripts/run_grid.py --n-min 8 --n-max 8 --extended   # long
"""

from pathlib import Path

from spectral_kit.config import GridConfig, from_argv
from spectral_kit.oracle import check_structural_claims, verify_bounds
from spectral_kit.report import Timer, claims_record, dumps, grid_csv, make_report, search_record


def main(argv=None) -> int:
    cfg = from_argv(GridConfig, argv)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)
    ns = list(range(cfg.n_min, cfg.n_max + 1))

    timer = Timer()
    with timer.phase("search"):
        results = verify_bounds(ns, jobs=cfg.jobs, extended=cfg.extended)
    records = [search_record(r) for r in results]
    params = {"n": ns, "kappa": None, "all_kappa": True, "extended": cfg.extended}
    (out / "grid.json").write_text(dumps(make_report("verify", params, records, timer)))
    (out / "grid.csv").write_text(grid_csv(records))

    print(f"{'n':>2} {'k':>2} {'class':>8} {'min':>14} {'predicted':>14}  verdict      B1")
    for r in records:
        b1 = "-" if r["b1_witness"] is None else ("yes" if r["b1_witness"] else "no")
        print(
            f"{r['n']:>2} {r['kappa']:>2} {r['class_size']:>8} {r['min_value']['value']:>14.10f} "
            f"{r['predicted']:>14.10f}  {r['verdict']:<12} {b1}"
        )

    if cfg.claims:
        ctimer = Timer()
        with ctimer.phase("claims"):
            crecs = [claims_record(g, check_structural_claims(g)) for r in results for g in r.witnesses]
        (out / "claims.json").write_text(dumps(make_report("claims", {"n": ns}, crecs, ctimer)))
        tally: dict[tuple[str, str], int] = {}
        for rec in crecs:
            for name, c in rec["claims"].items():
                tally[name, c["status"]] = tally.get((name, c["status"]), 0) + 1
        print(f"\nclaims over {len(crecs)} minimizers:")
        for (name, status), count in sorted(tally.items()):
            print(f"  {name:<15} {status:<15} {count}")

    return 1 if any(r["verdict"] == "violation" for r in records) else 0


if __name__ == "__main__":
    raise SystemExit(main())
