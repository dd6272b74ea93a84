"""Exhaustive search over labeled graphs for the least eigenvalue of complements.

Labeled graphs on n vertices are edge masks over ``edge_order(n)``. The
mask space is cut into fixed blocks of ``BLOCK`` masks; every block is
processed the same way regardless of how blocks are spread over worker
processes, so the merged result does not depend on ``jobs``.

The bulk pass is vectorised with numpy: connectivity by subset deletion
on bitrows, least eigenvalues by batched ``eigvalsh``. Witnesses are then
re-checked with the max-flow connectivity and the Jacobi solver.
"""

from __future__ import annotations

import itertools
import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterator

import numpy as np

from .extremal import balanced_b1, build_b1, predicted_min
from .graph import Graph, complement, component_masks, edge_order, is_clique, vertex_connectivity
from .matching import max_bipartite_matching, sign_crossing_matching
from .spectra import least_eigenpair, sign_partition

BLOCK = 1 << 15
MAX_N = 7
EXTENDED_MAX_N = 8
DEGENERATE_GAP = 1e-7


def verdict_tol() -> float:
    """Attainment tolerance; SPECTRAL_KIT_TOL overrides it (testing only)."""
    return float(os.environ.get("SPECTRAL_KIT_TOL", "1e-8"))


def _check_limits(n: int, extended: bool) -> None:
    cap = EXTENDED_MAX_N if extended else MAX_N
    if n > cap:
        hint = "" if extended else " (n = 8 needs extended mode)"
        raise ValueError(f"n={n} exceeds the enumeration limit {cap}{hint}")
    if n < 2:
        raise ValueError("enumeration needs n >= 2")


# ---------------------------------------------------------------- bulk kernels


def _rows(masks: np.ndarray, n: int) -> np.ndarray:
    rows = np.zeros((masks.size, n), dtype=np.int64)
    for e, (i, j) in enumerate(edge_order(n)):
        b = (masks >> e) & 1
        rows[:, i] |= b << j
        rows[:, j] |= b << i
    return rows


def _kappa_block(masks: np.ndarray, n: int) -> np.ndarray:
    """Vertex connectivity per mask; -1 for disconnected graphs, n-1 for K_n."""
    count = masks.size
    rows = _rows(masks, n)
    full = (1 << n) - 1
    # nbr[:, S] = union of neighbourhoods of the vertices in S
    nbr = np.zeros((count, 1 << n), dtype=np.int64)
    for s in range(1, 1 << n):
        low = (s & -s).bit_length() - 1
        nbr[:, s] = nbr[:, s & (s - 1)] | rows[:, low]
    idx = np.arange(count)

    def connected(r: int) -> np.ndarray:
        reach = np.full(count, r & -r, dtype=np.int64)
        for _ in range(r.bit_count() - 1):
            reach = (reach | nbr[idx, reach]) & r
        return reach == r

    kappa = np.full(count, n - 1, dtype=np.int64)
    kappa[~connected(full)] = -1
    for size in range(1, n - 1):
        for cut in itertools.combinations(range(n), size):
            rest = full & ~sum(1 << v for v in cut)
            hit = (kappa > size) & ~connected(rest)
            kappa[hit] = size
    return kappa


def _complement_least(masks: np.ndarray, n: int) -> np.ndarray:
    pairs = edge_order(n)
    ii = np.array([p[0] for p in pairs])
    jj = np.array([p[1] for p in pairs])
    comp = ((masks[:, None] >> np.arange(len(pairs))) & 1) ^ 1
    a = np.zeros((masks.size, n, n))
    a[:, ii, jj] = comp
    a[:, jj, ii] = comp
    return np.linalg.eigvalsh(a)[:, 0]


@dataclass
class BlockResult:
    counts: dict[int, int]  # kappa -> class size (kappa = n-1 is K_n)
    minima: dict[int, float]
    near: dict[int, list[tuple[int, float]]]  # (mask, value) within tol of the block minimum


def _scan_block(args: tuple[int, int, int, float]) -> BlockResult:
    n, lo, hi, tol = args
    masks = np.arange(lo, hi, dtype=np.int64)
    kappa = _kappa_block(masks, n)
    counts = {int(k): int(c) for k, c in zip(*np.unique(kappa[kappa >= 1], return_counts=True))}
    keep = (kappa >= 1) & (kappa <= n - 2)
    masks, kappa = masks[keep], kappa[keep]
    lam = _complement_least(masks, n) if masks.size else np.zeros(0)
    minima, near = {}, {}
    for k in np.unique(kappa):
        sel = kappa == k
        vals, ms = lam[sel], masks[sel]
        m = float(vals.min())
        close = vals <= m + tol
        minima[int(k)] = m
        near[int(k)] = [(int(a), float(b)) for a, b in zip(ms[close], vals[close])]
    return BlockResult(counts, minima, near)


def _blocks(n: int, tol: float) -> list[tuple[int, int, int, float]]:
    total = 1 << (n * (n - 1) // 2)
    return [(n, lo, min(lo + BLOCK, total), tol) for lo in range(0, total, BLOCK)]


def _run_blocks(n: int, jobs: int, tol: float) -> list[BlockResult]:
    tasks = _blocks(n, tol)
    if jobs <= 1 or len(tasks) == 1:
        return [_scan_block(t) for t in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_scan_block, tasks, chunksize=max(1, len(tasks) // (4 * jobs))))


@dataclass(frozen=True)
class ClassScan:
    n: int
    counts: dict[int, int]
    minima: dict[int, float]
    witnesses: dict[int, tuple[int, ...]]  # labeled witness masks, ascending


@lru_cache(maxsize=None)
def scan_classes(n: int, jobs: int = 1, extended: bool = False, tol: float | None = None) -> ClassScan:
    """One pass over all 2^C(n,2) masks, merged per connectivity class."""
    _check_limits(n, extended)
    tol = verdict_tol() if tol is None else tol
    parts = _run_blocks(n, jobs, tol)
    counts: dict[int, int] = {}
    minima: dict[int, float] = {}
    for part in parts:
        for k, c in part.counts.items():
            counts[k] = counts.get(k, 0) + c
        for k, m in part.minima.items():
            minima[k] = min(minima.get(k, math.inf), m)
    witnesses = {
        k: tuple(sorted(mask for part in parts for mask, v in part.near.get(k, ()) if v <= minima[k] + tol))
        for k in minima
    }
    return ClassScan(n, dict(sorted(counts.items())), dict(sorted(minima.items())), witnesses)


def connected_count(n: int, jobs: int = 1, extended: bool = False) -> int:
    return sum(scan_classes(n, jobs, extended).counts.values())


# ---------------------------------------------------------------- isomorphism


@lru_cache(maxsize=None)
def _perm_edge_maps(n: int) -> np.ndarray:
    pairs = edge_order(n)
    pos = {p: e for e, p in enumerate(pairs)}
    maps = np.empty((math.factorial(n), len(pairs)), dtype=np.int64)
    for r, perm in enumerate(itertools.permutations(range(n))):
        for e, (i, j) in enumerate(pairs):
            a, b = perm[i], perm[j]
            maps[r, e] = pos[(a, b) if a < b else (b, a)]
    return maps


def orbit(n: int, mask: int) -> np.ndarray:
    """Edge masks of all relabelings of ``mask`` (with repeats)."""
    maps = _perm_edge_maps(n)
    present = np.array([(mask >> e) & 1 for e in range(maps.shape[1])], dtype=np.int64)
    return (present[None, :] << maps).sum(axis=1)


def canonical_mask(n: int, mask: int) -> int:
    """Minimum edge mask over all n! relabelings."""
    return int(orbit(n, mask).min())


def dedup_masks(n: int, masks) -> list[int]:
    """One canonical mask per isomorphism class, ascending."""
    seen: set[int] = set()
    reps = []
    for m in sorted(masks):
        if m in seen:
            continue
        orb = orbit(n, m)
        seen.update(int(x) for x in orb)
        reps.append(int(orb.min()))
    return sorted(set(reps))


def enumerate_class(n: int, kappa: int, dedup: bool = False, extended: bool = False) -> Iterator[Graph]:
    """Every labeled graph on n vertices with connectivity exactly ``kappa``;
    with ``dedup`` only the canonical member of each isomorphism class."""
    _check_limits(n, extended)
    if not 1 <= kappa <= n - 1:
        raise ValueError(f"requires 1 <= kappa <= n - 1 (got n={n}, kappa={kappa})")
    if dedup and n > MAX_N:
        raise ValueError("isomorph suppression is only offered for n <= 7")
    seen: set[int] = set()
    for _, lo, hi, _ in _blocks(n, 0.0):
        masks = np.arange(lo, hi, dtype=np.int64)
        for m in masks[_kappa_block(masks, n) == kappa]:
            m = int(m)
            if dedup:
                if m in seen:
                    continue
                seen.update(int(x) for x in orbit(n, m))
            yield Graph.from_mask(n, m)


# ---------------------------------------------------------------- minimizers


@dataclass(frozen=True)
class SearchResult:
    n: int
    kappa: int
    min_value: float
    witnesses: tuple[Graph, ...]  # one canonical representative per isomorphism class
    labeled_witnesses: int
    class_size: int
    predicted: float
    verdict: str  # bound-tight | bound-holds | violation
    b1_witness: bool | None = None  # None when n < 2 kappa
    checks: dict = field(default_factory=dict)


def _verdict(min_value: float, predicted: float, tol: float) -> str:
    if abs(min_value - predicted) <= tol:
        return "bound-tight"
    if min_value >= predicted - tol:
        return "bound-holds"
    return "violation"


def find_minimizer(n: int, kappa: int, jobs: int = 1, extended: bool = False) -> SearchResult:
    """Least lambda_n(G^c) over connected G with connectivity ``kappa``."""
    _check_limits(n, extended)
    if not 1 <= kappa <= n - 2:
        raise ValueError(f"requires 1 <= kappa <= n - 2 (got n={n}, kappa={kappa})")
    tol = verdict_tol()
    scan = scan_classes(n, jobs, extended, tol)
    if kappa not in scan.minima:
        raise RuntimeError(f"class ({n}, {kappa}) is empty")
    reps = dedup_masks(n, scan.witnesses[kappa]) if n <= MAX_N else sorted(scan.witnesses[kappa])
    graphs = tuple(Graph.from_mask(n, m) for m in reps)

    # independent re-check of the reported witnesses
    worst = 0.0
    for g in graphs:
        k, _ = vertex_connectivity(g)
        if k != kappa:
            raise RuntimeError(f"witness {g} has connectivity {k}, expected {kappa}")
        worst = max(worst, abs(least_eigenpair(complement(g)).least_value - scan.minima[kappa]))
    if worst > tol:
        raise RuntimeError(f"Jacobi and batched eigenvalues disagree by {worst:.3e}")

    predicted = predicted_min(n, kappa)
    b1 = None
    if n >= 2 * kappa and n <= MAX_N:
        b1 = canonical_mask(n, build_b1(balanced_b1(n, kappa)).to_mask()) in set(reps)
    return SearchResult(
        n=n,
        kappa=kappa,
        min_value=scan.minima[kappa],
        witnesses=graphs,
        labeled_witnesses=len(scan.witnesses[kappa]),
        class_size=scan.counts[kappa],
        predicted=predicted,
        verdict=_verdict(scan.minima[kappa], predicted, tol),
        b1_witness=b1,
        checks={"witness_recheck_max_diff": worst},
    )


def verify_bounds(n_range, kappa_range=None, jobs: int = 1, extended: bool = False) -> list[SearchResult]:
    """find_minimizer over a grid; ``kappa_range=None`` means every 1..n-2."""
    out = []
    for n in n_range:
        ks = range(1, n - 1) if kappa_range is None else [k for k in kappa_range if 1 <= k <= n - 2]
        for k in ks:
            out.append(find_minimizer(n, k, jobs, extended))
    return out


# ---------------------------------------------------------------- structural claims


@dataclass(frozen=True)
class ClaimStatus:
    status: str  # hold | fail | flagged | not-applicable
    detail: str = ""


@dataclass(frozen=True)
class ClaimReport:
    kappa: int
    cut: tuple[int, ...]
    v_plus: tuple[int, ...]
    v_minus: tuple[int, ...]
    least_value: float
    least_vector: tuple[float, ...]
    degenerate: bool
    claims: dict[str, ClaimStatus]

    def ok(self) -> bool:
        return all(c.status != "fail" for c in self.claims.values())


def _status(holds: bool, flag_reason: str | None, detail: str) -> ClaimStatus:
    if holds:
        return ClaimStatus("hold", detail)
    if flag_reason:
        return ClaimStatus("flagged", f"{detail}; {flag_reason}")
    return ClaimStatus("fail", detail)


def _claim_34(g: Graph, sp, kappa: int) -> tuple[bool, str]:
    """An n2-matching from V- into U minus R and a set R of kappa - n2
    vertices of U complete to V-, for some choice of R."""
    minus = sorted(sp.v_minus)
    mmask = sum(1 << v for v in minus)
    need = kappa - sp.n2
    full_join = [u for u in sorted(sp.u_boundary) if g.adj[u] & mmask == mmask]
    for r in itertools.combinations(full_join, need):
        rest = sorted(sp.u_boundary - set(r))
        m = max_bipartite_matching(g, rest, minus)
        if len(m) == sp.n2:
            return True, f"R={list(r)} matching={list(m.pairs)}"
    return False, f"{len(full_join)} vertices of U complete to V-, need {need} plus an n2-matching"


def check_structural_claims(g: Graph) -> ClaimReport:
    """Evaluate the four structural claims on a (candidate) minimizer ``g``.

    two_components: deleting a minimum cut leaves exactly two components.
    sign_cliques: inside each component, the V+ and V- parts together with
        the cut vertices of the same sign induce cliques.
    cross_matching: a kappa-matching between V+ and V- (when n2 >= kappa).
    partial_join: when n1 >= kappa > n2, some kappa - n2 vertices of U are
        complete to V- and the rest of U carries an n2-matching into V-.

    The last three depend on the chosen least vector. If the least
    eigenvalue is multiple, their failures are flagged instead of failed.
    sign_cliques failures confined to pairs whose entries both vanish are
    flagged as well, since adding such an edge leaves lambda_n unchanged.
    """
    kappa, cut = vertex_connectivity(g)
    if kappa >= g.n - 1:
        raise ValueError("structural claims need a non-complete graph")
    sr = least_eigenpair(complement(g))
    degenerate = sr.least_gap < DEGENERATE_GAP
    sp = sign_partition(g, sr)
    x = sp.x
    zero = {v for v in range(g.n) if abs(x[v]) < 1e-9}
    cut_mask = sum(1 << v for v in cut.vertices)
    comps = component_masks(g, ((1 << g.n) - 1) & ~cut_mask)
    claims: dict[str, ClaimStatus] = {}

    claims["two_components"] = _status(len(comps) == 2, None, f"{len(comps)} components after removing the cut")

    plus_cut = {v for v in cut.vertices if v in sp.v_plus}
    minus_cut = set(cut.vertices) - plus_cut
    bad_pairs = []
    for c in comps:
        members = {v for v in range(g.n) if c >> v & 1}
        for side, bnd in ((sp.v_plus, plus_cut), (sp.v_minus, minus_cut)):
            s = sorted((members & side) | bnd)
            if not is_clique(g, s):
                bad_pairs += [(u, v) for u, v in itertools.combinations(s, 2) if not g.has_edge(u, v)]
    reason = None
    if degenerate:
        reason = "degenerate least eigenvalue"
    elif bad_pairs and all(u in zero and v in zero for u, v in bad_pairs):
        reason = "missing edges only between zero entries"
    claims["sign_cliques"] = _status(not bad_pairs, reason, f"non-adjacent pairs {sorted(set(bad_pairs))}" if bad_pairs else "")

    deg_reason = "degenerate least eigenvalue" if degenerate else None
    if sp.n2 >= kappa:
        m = sign_crossing_matching(g, sp, kappa)
        claims["cross_matching"] = _status(
            m is not None, deg_reason, f"max V+/V- matching size {len(max_bipartite_matching(g, sp.v_plus, sp.v_minus))}"
        )
    else:
        claims["cross_matching"] = ClaimStatus("not-applicable", f"n2={sp.n2} < kappa")

    if sp.n1 >= kappa > sp.n2:
        holds, detail = _claim_34(g, sp, kappa)
        claims["partial_join"] = _status(holds, deg_reason, detail)
    else:
        claims["partial_join"] = ClaimStatus("not-applicable", f"n1={sp.n1}, n2={sp.n2}, kappa={kappa}")

    return ClaimReport(
        kappa=kappa,
        cut=tuple(sorted(cut.vertices)),
        v_plus=tuple(sorted(sp.v_plus)),
        v_minus=tuple(sorted(sp.v_minus)),
        least_value=sr.least_value,
        least_vector=tuple(float(v) for v in x),
        degenerate=degenerate,
        claims=claims,
    )
