"""Sweeps over the extremal families.

quotient_vs_dense.csv: quotient least root against the dense Jacobi value
for every valid B1/B2 triple with n1 + n2 <= max_size, and the exact value
for B3.
b1_vs_b2.csv: balanced B1 against B2(n - kappa + 1, kappa - 1) for every
2 <= kappa <= n/2, n <= max_n, with the gap between the two least roots.

    python3 scripts/extremal_sweep.py --max-size 14 --max-n 30
"""

import csv
from pathlib import Path

from spectral_kit.config import SweepConfig, from_argv
from spectral_kit.extremal import (
    ExtremalParams,
    build,
    compare_b1_b2,
    least_root,
    quotient_poly_b1,
    quotient_poly_b2,
)
from spectral_kit.graph import complement
from spectral_kit.spectra import least_eigenpair


def predicted(p: ExtremalParams) -> float:
    if p.family == "B1":
        return least_root(quotient_poly_b1(p.n1, p.n2, p.kappa))
    if p.family == "B2":
        return least_root(quotient_poly_b2(p.n1, p.n2, p.kappa))
    return float(p.kappa + 1 - p.n)


def main(argv=None) -> int:
    cfg = from_argv(SweepConfig, argv)
    out = Path(cfg.out_dir)
    out.mkdir(parents=True, exist_ok=True)

    rows, worst = [], {}
    for family in ("B1", "B2", "B3"):
        for n1 in range(1, cfg.max_size):
            for n2 in range(1, cfg.max_size - n1 + 1):
                for k in range(1, cfg.max_size):
                    p = ExtremalParams(n1, n2, k, family)
                    if not p.is_valid():
                        continue
                    dense = least_eigenpair(complement(build(p))).least_value
                    want = predicted(p)
                    err = abs(dense - want)
                    worst[family] = max(worst.get(family, 0.0), err)
                    rows.append([family, n1, n2, k, f"{want:.12g}", f"{dense:.12g}", f"{err:.3g}"])
    with open(out / "quotient_vs_dense.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["family", "n1", "n2", "kappa", "predicted", "dense", "abs_error"])
        w.writerows(rows)
    for family, e in worst.items():
        print(f"{family}: {sum(r[0] == family for r in rows)} triples, max |predicted - dense| = {e:.2e}")

    ties, gaps = [], []
    with open(out / "b1_vs_b2.csv", "w", newline="") as fh:
        w = csv.writer(fh)
        w.writerow(["n", "kappa", "lam_b1", "lam_b2", "gap", "strict"])
        for n in range(4, cfg.max_n + 1):
            for k in range(2, n // 2 + 1):
                c = compare_b1_b2(n, k)
                gap = c.lam_b2 - c.lam_b1
                w.writerow([n, k, f"{c.lam_b1:.12g}", f"{c.lam_b2:.12g}", f"{gap:.6g}", c.strict])
                if c.strict:
                    gaps.append((gap, n, k))
                else:
                    ties.append((n, k, c.lam_b1))
    print(f"B1 below B2 strictly except at {[(n, k) for n, k, _ in ties]}")
    for n, k, lam in ties:
        print(f"  (n={n}, kappa={k}): both least eigenvalues equal {lam:.12g}")
    if gaps:
        gap, n, k = min(gaps)
        print(f"smallest strict gap: {gap:.6g} at n={n}, kappa={k}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
