"""Adjacency spectra: a cyclic Jacobi eigensolver and the quadratic-form
identities used throughout (Rayleigh quotient, eigen-equation residual,
degree bounds, sign structure of least vectors, edge-addition comparison).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .graph import Graph, bits, to_mask

ZERO_TOL = 1e-9
OFF_TOL = 1e-12
MAX_SWEEPS = 100


@dataclass(frozen=True)
class SpectralResult:
    eigenvalues: np.ndarray  # descending
    vectors: np.ndarray  # column k belongs to eigenvalues[k]
    sweeps: int = 0

    @property
    def least_value(self) -> float:
        return float(self.eigenvalues[-1])

    @property
    def least_vector(self) -> np.ndarray:
        return self.vectors[:, -1]

    @property
    def spectral_radius(self) -> float:
        return float(self.eigenvalues[0])

    @property
    def least_gap(self) -> float:
        """Distance from the least eigenvalue to the next one (inf for n = 1)."""
        if len(self.eigenvalues) < 2:
            return math.inf
        return float(self.eigenvalues[-2] - self.eigenvalues[-1])


def _off_norm(a: np.ndarray) -> float:
    # summing the off-diagonal squares directly avoids cancellation against the diagonal
    off = a[~np.eye(a.shape[0], dtype=bool)]
    return math.sqrt(float(off @ off))


def eigen_sym(a) -> SpectralResult:
    """All eigenpairs of a real symmetric matrix by cyclic Jacobi rotations.

    Stops once the off-diagonal Frobenius norm drops below 1e-12 or after
    100 sweeps. The least vector is normalised so its first entry of
    magnitude above 1e-9 is positive.
    """
    a = np.array(a, dtype=float)
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, rtol=0.0, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    n = a.shape[0]
    v = np.eye(n)

    sweeps = 0
    while _off_norm(a) >= OFF_TOL and sweeps < MAX_SWEEPS:
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) < 1e-300:
                    a[p, q] = a[q, p] = 0.0
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.hypot(1.0, tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                cp, cq = a[:, p].copy(), a[:, q].copy()
                a[:, p] = c * cp - s * cq
                a[:, q] = s * cp + c * cq
                rp, rq = a[p, :].copy(), a[q, :].copy()
                a[p, :] = c * rp - s * rq
                a[q, :] = s * rp + c * rq
                a[p, q] = a[q, p] = 0.0
                vp, vq = v[:, p].copy(), v[:, q].copy()
                v[:, p] = c * vp - s * vq
                v[:, q] = s * vp + c * vq

    w = np.diag(a).copy()
    # stable sort on (-w) keeps the order deterministic for ties
    order = np.argsort(-w, kind="stable")
    w, v = w[order], v[:, order]
    x = v[:, -1]
    big = np.flatnonzero(np.abs(x) > ZERO_TOL)
    if big.size and x[big[0]] < 0:
        v[:, -1] = -x
    return SpectralResult(w, v, sweeps)


def least_eigenpair(g: Graph) -> SpectralResult:
    return eigen_sym(g.adjacency_matrix())


def _check_len(g: Graph, x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    if x.shape != (g.n,):
        raise ValueError(f"vector of length {x.shape} does not match n={g.n}")
    return x


def rayleigh(g: Graph, x) -> float:
    """Quadratic form x^T A(g) x evaluated edge by edge."""
    x = _check_len(g, x)
    return float(sum(2.0 * x[i] * x[j] for i, j in g.edges()))


def eigen_residual(g: Graph, lam: float, x) -> float:
    x = _check_len(g, x)
    return max(
        (abs(lam * x[i] - sum(x[j] for j in bits(g.adj[i]))) for i in range(g.n)),
        default=0.0,
    )


def degree_bounds_check(g: Graph, sr: SpectralResult | None = None) -> bool:
    """sqrt(Delta) <= lambda_1 <= Delta, with 1e-9 slack."""
    sr = sr or least_eigenpair(g)
    delta = g.max_degree()
    lam1 = sr.spectral_radius
    return delta + 1e-9 >= lam1 >= math.sqrt(delta) - 1e-9


@dataclass(frozen=True)
class SignPartition:
    x: np.ndarray  # the vector after orientation
    v_plus: frozenset[int]
    v_minus: frozenset[int]
    u_boundary: frozenset[int]
    w_boundary: frozenset[int]

    @property
    def n1(self) -> int:
        return len(self.v_plus)

    @property
    def n2(self) -> int:
        return len(self.v_minus)


def _split(x: np.ndarray) -> tuple[list[int], list[int]]:
    plus = [i for i, xi in enumerate(x) if xi >= 0 or abs(xi) < ZERO_TOL]
    minus = [i for i, xi in enumerate(x) if xi < 0 and abs(xi) >= ZERO_TOL]
    return plus, minus


def sign_partition(g: Graph, sr: SpectralResult | np.ndarray) -> SignPartition:
    """Split V by the sign of a least vector; entries below 1e-9 count as zero
    and land in V+. Boundaries U, W are taken with respect to the edges of ``g``.
    """
    x = np.asarray(sr.least_vector if isinstance(sr, SpectralResult) else sr, dtype=float)
    x = _check_len(g, x)
    plus, minus = _split(x)
    if len(plus) < len(minus):
        x = -x
        plus, minus = _split(x)
    elif len(plus) == len(minus):
        fplus, fminus = _split(-x)
        if len(fplus) == len(fminus) and fplus < plus:
            x, plus, minus = -x, fplus, fminus
    pm, mm = to_mask(plus), to_mask(minus)
    u = frozenset(v for v in plus if g.adj[v] & mm)
    w = frozenset(v for v in minus if g.adj[v] & pm)
    return SignPartition(x, frozenset(plus), frozenset(minus), u, w)


@dataclass(frozen=True)
class PerturbationCertificate:
    lam_star: float  # lambda_n(G*)
    lam_added: float  # lambda_n(G* + uv)
    x_zero: bool  # x_u = 0 or x_v = 0, x least vector of G* + uv
    y_zero: bool  # y_u = 0 or y_v = 0, y least vector of G*
    y_opposite: bool  # y_u * y_v < 0
    violations: tuple[str, ...]

    @property
    def holds(self) -> bool:
        return not self.violations


def perturbation_compare(g_star: Graph, u: int, v: int, tol: float = 1e-9) -> PerturbationCertificate:
    """Compare least eigenvalues before and after adding the non-edge ``uv``.

    For each hypothesis on the computed least vectors that applies, the
    matching inequality is checked; under y_u * y_v < 0 the sharper
    Rayleigh bound lambda_n(G) <= lambda_n(G*) + 2 y_u y_v is used, which
    implies the strict inequality.
    """
    if g_star.has_edge(u, v) or u == v:
        raise ValueError(f"{u} and {v} must be distinct non-adjacent vertices")
    g = g_star.add_edge(u, v)
    ss, sg = least_eigenpair(g_star), least_eigenpair(g)
    y, x = ss.least_vector, sg.least_vector
    lam_star, lam = ss.least_value, sg.least_value

    x_zero = bool(abs(x[u]) < ZERO_TOL or abs(x[v]) < ZERO_TOL)
    y_zero = bool(abs(y[u]) < ZERO_TOL or abs(y[v]) < ZERO_TOL)
    y_opp = bool(not y_zero and y[u] * y[v] < 0)
    bad = []
    if x_zero and not lam_star <= lam + tol:
        bad.append("i")
    if y_zero and not lam <= lam_star + tol:
        bad.append("ii")
    if y_opp and not lam <= lam_star + 2 * y[u] * y[v] + tol:
        bad.append("iii")
    return PerturbationCertificate(lam_star, lam, x_zero, y_zero, y_opp, tuple(bad))
