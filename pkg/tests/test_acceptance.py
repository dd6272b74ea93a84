"""Acceptance suite: one test and one PASS/FAIL line per criterion.

The lines are printed as each test finishes and repeated in the terminal
summary. Run alone with ``pytest tests/test_acceptance.py`` or
``python3 tests/test_acceptance.py``.
"""

import itertools
import json
import math
import sys

import numpy as np
import pytest

from spectral_kit.cli import main as cli_main
from spectral_kit.extremal import (
    ExtremalParams,
    build,
    compare_b1_b2,
    least_root,
    predicted_min,
    quotient_poly_b1,
    quotient_poly_b2,
)
from spectral_kit.graph import Graph, complement, component_masks, is_connected, to_mask
from spectral_kit.matching import greedy_matching, hall_violator, is_maximum, max_bipartite_matching
from spectral_kit.oracle import check_structural_claims, verify_bounds
from spectral_kit.report import results_bytes
from spectral_kit.spectra import degree_bounds_check, least_eigenpair, perturbation_compare, rayleigh

RESULTS: dict[int, str] = {}
GRID = range(4, 8)
SIZE_CAP = 14


def record(k: int, ok: bool, detail: str) -> None:
    line = f"ACCEPTANCE {k}: {'PASS' if ok else 'FAIL'} - {detail}"
    RESULTS[k] = line
    print(line)
    assert ok, line


def triples(family: str, cap: int = SIZE_CAP):
    for n1 in range(1, cap):
        for n2 in range(1, cap - n1 + 1):
            for k in range(1, cap):
                p = ExtremalParams(n1, n2, k, family)
                if p.is_valid():
                    yield p


def dense_least(g: Graph) -> float:
    return least_eigenpair(g).least_value


@pytest.fixture(scope="module")
def grid_results():
    return verify_bounds(GRID)


# 1 -----------------------------------------------------------------------------


def test_criterion_1_exhaustive_bounds(grid_results):
    bad = []
    for r in grid_results:
        if abs(r.min_value - predicted_min(r.n, r.kappa)) > 1e-8:
            bad.append(f"({r.n},{r.kappa}) min {r.min_value:.10f} vs {r.predicted:.10f}")
        if r.n >= 2 * r.kappa and not r.b1_witness:
            bad.append(f"({r.n},{r.kappa}) no balanced B1 among minimizers")
    cells = [(r.n, r.kappa) for r in grid_results]
    expected = [(n, k) for n in GRID for k in range(1, n - 1)]
    if cells != expected:
        bad.append(f"grid {cells} != {expected}")
    record(1, not bad, f"{len(cells)} cells n=4..7 bound-tight" if not bad else "; ".join(bad))


# 2 -----------------------------------------------------------------------------


def test_criterion_2_quotient_vs_dense():
    worst_b1 = worst_b2 = worst_closed = 0.0
    count = 0
    for p in triples("B1"):
        lam = dense_least(complement(build(p)))
        worst_b1 = max(worst_b1, abs(least_root(quotient_poly_b1(p.n1, p.n2, p.kappa)) - lam))
        count += 1
    for p in triples("B2"):
        lam = dense_least(complement(build(p)))
        root = least_root(quotient_poly_b2(p.n1, p.n2, p.kappa))
        closed = -math.sqrt((p.n2 - 1) ** 2 + (p.n1 - p.kappa) * p.n2)
        worst_b2 = max(worst_b2, abs(root - lam))
        worst_closed = max(worst_closed, abs(closed - lam), abs(closed - root))
        count += 1
    ok = max(worst_b1, worst_b2, worst_closed) <= 1e-8
    record(
        2,
        ok,
        f"{count} triples, n1+n2<={SIZE_CAP}: max |g-dense| {worst_b1:.1e}, "
        f"|f-dense| {worst_b2:.1e}, |closed form| {worst_closed:.1e}",
    )


# 3 -----------------------------------------------------------------------------


def _b3_structure_ok(p: ExtremalParams) -> bool:
    gc = complement(build(p))
    n = p.n
    isolated = [v for v in range(n) if gc.degree(v) == 0]
    rest = [v for v in range(n) if gc.degree(v) > 0]
    if len(isolated) != p.n1 - p.n2:
        return False
    if any(gc.degree(v) != n - p.kappa - 1 for v in rest):
        return False
    # two-colour every component of the non-isolated part
    colour: dict[int, int] = {}
    for comp in component_masks(gc, to_mask(rest)):
        start = (comp & -comp).bit_length() - 1
        colour[start] = 0
        stack = [start]
        while stack:
            u = stack.pop()
            for w in gc.neighbors(u):
                if w not in colour:
                    colour[w] = 1 - colour[u]
                    stack.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


def test_criterion_3_b3_identity():
    worst, bad, count = 0.0, [], 0
    for p in triples("B3"):
        err = abs(dense_least(complement(build(p))) - (p.kappa + 1 - p.n))
        worst = max(worst, err)
        if err > 1e-9 or not _b3_structure_ok(p):
            bad.append((p.n1, p.n2, p.kappa))
        count += 1
    record(3, not bad, f"{count} triples, max error {worst:.1e}" + (f", bad {bad[:5]}" if bad else ""))


# 4 -----------------------------------------------------------------------------


def test_criterion_4_closed_values():
    worst, count = 0.0, 0
    for n in range(4, 21):
        for k in range(1, n - 1):
            if n < 2 * k:
                p = ExtremalParams(k, n - k, k, "B2")
                want = k + 1 - n
            elif k >= 2:
                p = ExtremalParams(n - k + 1, k - 1, k, "B2")
                want = -math.sqrt((k - 2) ** 2 + (n - 2 * k + 1) * (k - 1))
            else:
                continue
            worst = max(worst, abs(dense_least(complement(build(p))) - want))
            count += 1
    record(4, worst <= 1e-9, f"{count} (n, kappa) pairs, 4<=n<=20, max error {worst:.1e}")


# 5 -----------------------------------------------------------------------------


def test_criterion_5_monotonicity():
    balance_bad = []
    steps = 0
    for n in range(4, 31):
        for k in range(1, n // 2 + 1):
            n1, n2 = n - k, k
            while n1 > n2 + 1:
                a = least_root(quotient_poly_b1(n1, n2, k))
                b = least_root(quotient_poly_b1(n1 - 1, n2 + 1, k))
                steps += 1
                if not b < a:
                    balance_bad.append((n1, n2, k))
                n1, n2 = n1 - 1, n2 + 1
    strict_bad = []
    pairs = 0
    for n in range(4, 31):
        for k in range(2, n // 2 + 1):
            c = compare_b1_b2(n, k)
            pairs += 1
            if not c.lam_b1 < c.lam_b2:
                strict_bad.append(f"(n={n},kappa={k}): B1 {c.lam_b1:.12g} vs B2 {c.lam_b2:.12g}")
    ok = not balance_bad and not strict_bad
    detail = f"balancing {steps} steps, {len(balance_bad)} bad; B1<B2 strict on {pairs - len(strict_bad)}/{pairs}"
    if strict_bad:
        detail += "; not strict at " + ", ".join(strict_bad)
    record(5, ok, detail)


# 6 -----------------------------------------------------------------------------


def _random_graph(rng, lo=2, hi=10) -> Graph:
    n = int(rng.integers(lo, hi + 1))
    p = rng.uniform(0.15, 0.85)
    return Graph.from_edges(n, [(i, j) for i, j in itertools.combinations(range(n), 2) if rng.random() < p])


def _random_bipartite(rng):
    a, b = int(rng.integers(1, 6)), int(rng.integers(1, 6))
    p = rng.uniform(0.1, 0.8)
    left, right = list(range(a)), list(range(a, a + b))
    g = Graph.from_edges(a + b, [(u, w) for u in left for w in right if rng.random() < p])
    return g, left, right


def _brute_max(g, left, right) -> int:
    cross = [(u, w) for u in left for w in right if g.has_edge(u, w)]
    for size in range(min(len(left), len(right)), 0, -1):
        for combo in itertools.combinations(cross, size):
            ends = [v for e in combo for v in e]
            if len(set(ends)) == len(ends):
                return size
    return 0


def _brute_hall(g, left, right) -> bool:
    rmask = to_mask(right)
    for size in range(1, len(left) + 1):
        for s in itertools.combinations(left, size):
            nbr = 0
            for v in s:
                nbr |= g.adj[v] & rmask
            if nbr.bit_count() < size:
                return False
    return True


def test_criterion_6_preliminary_properties():
    rng = np.random.default_rng(20240601)
    need = 500
    tally = {}

    ok = 0
    for _ in range(need):
        g = _random_graph(rng)
        sr = least_eigenpair(g)
        x = rng.normal(size=g.n)
        q = rayleigh(g, x) / float(x @ x)
        ok += sr.least_value - 1e-9 <= q <= sr.spectral_radius + 1e-9
    tally["rayleigh"] = ok

    tally["degree"] = sum(degree_bounds_check(_random_graph(rng)) for _ in range(need))

    ok = done = 0
    while done < need:
        g = _random_graph(rng, 3)
        non_edges = [(u, v) for u, v in itertools.combinations(range(g.n), 2) if not g.has_edge(u, v)]
        if not non_edges:
            continue
        u, v = non_edges[int(rng.integers(len(non_edges)))]
        ok += perturbation_compare(g, u, v).holds
        done += 1
    tally["edge-addition"] = ok

    ok = 0
    for _ in range(need):
        g, left, right = _random_bipartite(rng)
        saturating = len(max_bipartite_matching(g, left, right)) == len(left)
        ok += (hall_violator(g, left, right) is None) == saturating == _brute_hall(g, left, right)
    tally["hall"] = ok

    ok = 0
    for _ in range(need):
        g, left, right = _random_bipartite(rng)
        m = greedy_matching(g, left, right)
        ok += is_maximum(g, m, left, right) == (len(m) == _brute_max(g, left, right))
    tally["berge"] = ok

    ok = done = 0
    while done < need:
        g = _random_graph(rng, 4)
        gc = complement(g)
        if not (is_connected(g) and is_connected(gc)):
            continue
        x = least_eigenpair(gc).least_vector
        ok += int(np.sum(x > 1e-9) >= 2 and np.sum(x < -1e-9) >= 2)
        done += 1
    tally["sign-count"] = ok

    record(6, all(v == need for v in tally.values()), ", ".join(f"{k} {v}/{need}" for k, v in tally.items()))


# 7 -----------------------------------------------------------------------------


def test_criterion_7_structural_claims(grid_results):
    bad, flagged, degenerate, witnesses = [], 0, 0, 0
    for r in grid_results:
        for g in r.witnesses:
            rep = check_structural_claims(g)
            witnesses += 1
            degenerate += rep.degenerate
            c = rep.claims
            if c["two_components"].status != "hold":
                bad.append((r.n, r.kappa, "two_components"))
            st = c["sign_cliques"].status
            if st == "flagged":
                flagged += 1
                if not rep.degenerate:
                    bad.append((r.n, r.kappa, "sign_cliques flagged without degeneracy"))
            elif st != "hold":
                bad.append((r.n, r.kappa, "sign_cliques"))
            for name in ("cross_matching", "partial_join"):
                if c[name].status not in ("hold", "not-applicable"):
                    bad.append((r.n, r.kappa, name))
    ok = not bad and flagged <= degenerate
    record(
        7,
        ok,
        f"{witnesses} witnesses, {degenerate} with a multiple least eigenvalue, {flagged} flagged"
        + (f"; problems {bad}" if bad else ""),
    )


# 8 -----------------------------------------------------------------------------


def test_criterion_8_jobs_determinism(tmp_path):
    outputs = []
    for jobs in (1, 8):
        path = tmp_path / f"jobs{jobs}.json"
        code = cli_main(["verify", "--n", "4..7", "--all-kappa", "--jobs", str(jobs), "--output", str(path)])
        outputs.append((code, results_bytes(json.loads(path.read_text()))))
    (c1, b1), (c8, b8) = outputs
    record(8, c1 == c8 == 0 and b1 == b8, f"exit codes {c1}/{c8}, results {len(b1)} bytes, identical={b1 == b8}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
