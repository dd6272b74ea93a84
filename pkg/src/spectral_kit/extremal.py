"""Extremal two-clique families B1, B2, B3 and their quotient polynomials.

Vertex layout is fixed: side 1 is ``0..n1-1``, side 2 is ``n1..n1+n2-1``.
Matchings pair equal offsets (i, n1 + i).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph

FAMILIES = ("B1", "B2", "B3")


@dataclass(frozen=True)
class ExtremalParams:
    n1: int
    n2: int
    kappa: int
    family: str = "B1"

    def __post_init__(self):
        object.__setattr__(self, "family", self.family.upper())
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; expected one of {FAMILIES}")

    @property
    def n(self) -> int:
        return self.n1 + self.n2

    def validate(self) -> None:
        n1, n2, k = self.n1, self.n2, self.kappa
        if n2 < 1:
            raise ValueError(f"requires n2 >= 1 (got n2={n2})")
        if n1 < n2:
            raise ValueError(f"requires n1 >= n2 (got n1={n1}, n2={n2})")
        if k < 1:
            raise ValueError(f"requires kappa >= 1 (got kappa={k})")
        if self.family == "B1" and not n2 >= k:
            raise ValueError(f"B1 requires n2 >= kappa (got n2={n2}, kappa={k})")
        if self.family == "B2" and not n1 >= k > n2:
            raise ValueError(f"B2 requires n1 >= kappa > n2 (got n1={n1}, n2={n2}, kappa={k})")
        if self.family == "B3":
            if not k > n1:
                raise ValueError(f"B3 requires kappa > n1 (got n1={n1}, kappa={k})")
            if not k <= self.n - 2:
                raise ValueError(f"B3 requires kappa <= n - 2 (got n={self.n}, kappa={k})")

    def is_valid(self) -> bool:
        try:
            self.validate()
        except ValueError:
            return False
        return True


def _two_cliques(n1: int, n2: int) -> list[tuple[int, int]]:
    side1 = [(i, j) for i in range(n1) for j in range(i + 1, n1)]
    side2 = [(n1 + i, n1 + j) for i in range(n2) for j in range(i + 1, n2)]
    return side1 + side2


def build_b1(p: ExtremalParams) -> Graph:
    """K_{n1} and K_{n2} joined by a kappa-matching."""
    p = ExtremalParams(p.n1, p.n2, p.kappa, "B1")
    p.validate()
    cross = [(i, p.n1 + i) for i in range(p.kappa)]
    return Graph.from_edges(p.n, _two_cliques(p.n1, p.n2) + cross)


def build_b2(p: ExtremalParams) -> Graph:
    """K_{n1} and K_{n2} joined by an n2-matching, plus a complete join from
    side 2 to the kappa - n2 side-1 vertices ``n2..kappa-1`` (the set R1)."""
    p = ExtremalParams(p.n1, p.n2, p.kappa, "B2")
    p.validate()
    cross = [(i, p.n1 + i) for i in range(p.n2)]
    cross += [(r, p.n1 + j) for r in range(p.n2, p.kappa) for j in range(p.n2)]
    return Graph.from_edges(p.n, _two_cliques(p.n1, p.n2) + cross)


def b3_complement_pattern(p: ExtremalParams) -> list[tuple[int, int]]:
    """Cross non-edges of B3: side-1 vertex ``n1-n2+i`` misses side-2 offsets
    ``i, i+1, ..., i+d-1 (mod n2)`` with d = n - kappa - 1."""
    d = p.n - p.kappa - 1
    s = p.n1 - p.n2
    return [(s + i, p.n1 + (i + r) % p.n2) for i in range(p.n2) for r in range(d)]


def build_b3(p: ExtremalParams) -> Graph:
    """Two cliques whose cross complement is a circulant (n-kappa-1)-regular
    bipartite graph; the first n1 - n2 side-1 vertices (S) see all of side 2."""
    p = ExtremalParams(p.n1, p.n2, p.kappa, "B3")
    p.validate()
    d = p.n - p.kappa - 1
    if not 0 < d < p.n2:
        raise ValueError(f"circulant pattern needs 0 < n - kappa - 1 < n2 (got {d}, n2={p.n2})")
    missing = set(b3_complement_pattern(p))
    cross = [
        (i, p.n1 + j) for i in range(p.n1) for j in range(p.n2) if (i, p.n1 + j) not in missing
    ]
    g = Graph.from_edges(p.n, _two_cliques(p.n1, p.n2) + cross)
    s = p.n1 - p.n2
    for side, others in ((range(s, p.n1), range(p.n1, p.n)), (range(p.n1, p.n), range(s, p.n1))):
        nbhds = [g.adj[v] & sum(1 << u for u in others) for v in side]
        if len(set(nbhds)) != len(nbhds):
            raise ValueError(f"cross neighbourhoods are not pairwise distinct for {p}")
    return g


def build(p: ExtremalParams) -> Graph:
    return {"B1": build_b1, "B2": build_b2, "B3": build_b3}[p.family](p)


@dataclass(frozen=True)
class QuotientPoly:
    coeffs: tuple[float, float, float, float, float]  # descending powers of lambda

    def __call__(self, lam):
        return np.polyval(self.coeffs, lam)

    def __sub__(self, other: QuotientPoly) -> QuotientPoly:
        return QuotientPoly(tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def is_even(self) -> bool:
        return self.coeffs[1] == 0 and self.coeffs[3] == 0

    def cauchy_bound(self) -> float:
        c = list(self.coeffs)
        while c and c[0] == 0:
            c.pop(0)
        if len(c) < 2:
            return 1.0
        return 1.0 + max(abs(a / c[0]) for a in c[1:])


def quotient_poly_b1(n1: int, n2: int, kappa: int) -> QuotientPoly:
    """Characteristic polynomial of the 4-class quotient of the B1 complement."""
    k = kappa
    return QuotientPoly((1.0, 0.0, float(2 * k - n1 * n2 - 1), 0.0, float(k * k - (n1 + n2) * k + n1 * n2)))


def quotient_poly_b2(n1: int, n2: int, kappa: int) -> QuotientPoly:
    """lambda^2 (lambda^2 - (n2-1)^2 - (n1-kappa) n2)."""
    return QuotientPoly((1.0, 0.0, -float((n2 - 1) ** 2 + (n1 - kappa) * n2), 0.0, 0.0))


def quotient_matrix_b1(n1: int, n2: int, kappa: int) -> np.ndarray:
    k = kappa
    return np.array(
        [
            [0, 0, n2 - k, k],
            [0, 0, n2 - k, k - 1],
            [n1 - k, k, 0, 0],
            [n1 - k, k - 1, 0, 0],
        ],
        dtype=float,
    )


def quotient_matrix_b2(n1: int, n2: int, kappa: int) -> np.ndarray:
    """Classes: free side-1, R1, matched side-1, side 2. A side-2 vertex sees
    n2 - 1 matched side-1 vertices in the complement, hence the last row."""
    return np.array(
        [
            [0, 0, 0, n2],
            [0, 0, 0, 0],
            [0, 0, 0, n2 - 1],
            [n1 - kappa, 0, n2 - 1, 0],
        ],
        dtype=float,
    )


def biquadratic_least_root(q: QuotientPoly) -> float:
    """Closed-form least real root of a lambda^4 + b lambda^2 + c (or lower degree)."""
    a, _, b, _, c = q.coeffs
    if a == 0:
        if b == 0:
            raise ValueError("constant polynomial has no least root")
        t = [-c / b]
    else:
        disc = b * b - 4 * a * c
        if disc < 0:
            raise ValueError("no real root")
        r = math.sqrt(disc)
        t = [(-b + r) / (2 * a), (-b - r) / (2 * a)]
    t = [ti for ti in t if ti >= 0]
    if not t:
        raise ValueError("no real root")
    return -math.sqrt(max(t))


def least_root(q: QuotientPoly, bracket_hint: tuple[float, float] | None = None, tol: float = 1e-12) -> float:
    """Leftmost real root in [-cauchy_bound, 0]: scan in steps of 1/64 for
    the first sign change, then bisect down to ``tol``.

    Quotient polynomials always have their least root at or below zero, so
    the window stops there. Roots of even multiplicity are invisible to the
    scan.
    """
    lo, hi = bracket_hint if bracket_hint else (-q.cauchy_bound(), 0.0)
    step = 1.0 / 64
    count = max(int(math.ceil((hi - lo) / step)), 1)
    grid = np.minimum(lo + step * np.arange(count + 1), hi)
    vals = q(grid)
    hits = np.flatnonzero(vals == 0)
    flips = np.flatnonzero((vals[:-1] < 0) != (vals[1:] < 0))
    first_hit = hits[0] if hits.size else len(grid)
    # an exact zero on the grid wins unless a sign change happens strictly before it
    if flips.size and flips[0] + 1 <= first_hit and vals[flips[0]] != 0 and vals[flips[0] + 1] != 0:
        i = flips[0]
        found = (float(grid[i]), float(grid[i + 1]), float(vals[i]))
    elif hits.size:
        return float(grid[first_hit])
    else:
        raise ValueError(f"no sign change of {q.coeffs} in [{lo}, {hi}]")
    a, b, fa = found
    while b - a > tol:
        m = 0.5 * (a + b)
        fm = q(m)
        if fm == 0:
            return float(m)
        if (fm < 0) == (fa < 0):
            a, fa = m, fm
        else:
            b = m
    root = 0.5 * (a + b)
    if q.is_even() and bracket_hint is None:
        closed = biquadratic_least_root(q)
        if abs(closed - root) > 1e-9:
            raise RuntimeError(f"bisection root {root} disagrees with closed form {closed}")
    return float(root)


def _check_kappa(n: int, kappa: int) -> None:
    if not 1 <= kappa <= n - 2:
        raise ValueError(f"requires 1 <= kappa <= n - 2 (got n={n}, kappa={kappa})")


def balanced_b1(n: int, kappa: int) -> ExtremalParams:
    return ExtremalParams((n + 1) // 2, n // 2, kappa, "B1")


def predicted_min(n: int, kappa: int) -> float:
    """Lower bound on lambda_n of complements of graphs in the class (n, kappa)."""
    _check_kappa(n, kappa)
    if n < 2 * kappa:
        return float(kappa + 1 - n)
    p = balanced_b1(n, kappa)
    return least_root(quotient_poly_b1(p.n1, p.n2, kappa))


@dataclass(frozen=True)
class ComparisonCertificate:
    n: int
    kappa: int
    lam_b1: float
    lam_b2: float
    phi: QuotientPoly
    phi_at_b2: float
    g_at_b2: float

    @property
    def strict(self) -> bool:
        return self.lam_b1 < self.lam_b2

    @property
    def holds(self) -> bool:
        return self.strict and self.phi_at_b2 < 0


def compare_b1_b2(n: int, kappa: int) -> ComparisonCertificate:
    """Balanced B1 against B2(n-kappa+1, kappa-1) via their quotient roots."""
    if kappa < 2 or n < 2 * kappa:
        raise ValueError(f"requires n >= 2 kappa and kappa >= 2 (got n={n}, kappa={kappa})")
    p = balanced_b1(n, kappa)
    g = quotient_poly_b1(p.n1, p.n2, kappa)
    f = quotient_poly_b2(n - kappa + 1, kappa - 1, kappa)
    lam_b1, lam_b2 = least_root(g), least_root(f)
    phi = g - f
    return ComparisonCertificate(n, kappa, lam_b1, lam_b2, phi, float(phi(lam_b2)), float(g(lam_b2)))
