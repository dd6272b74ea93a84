"""Structured reports emitted by the command line front end.

A report is a JSON document with a ``schema_version``, the ``command``,
its ``params``, a list of ``results`` records and per-phase ``timings``
in milliseconds. The schema lives next to this module in
``report_schema.json``. Only ``timings`` may differ between identical
invocations.
"""

from __future__ import annotations

import csv
import io
import json
import time
from contextlib import contextmanager
from importlib import resources

import numpy as np

from .graph import Graph, complement
from .graphio import to_graph6
from .oracle import ClaimReport, SearchResult
from .spectra import SpectralResult, eigen_residual, least_eigenpair

SCHEMA_VERSION = "1.0"


def num(x: float) -> float:
    """Round to 12 significant digits; -0.0 becomes 0.0."""
    v = float(f"{float(x):.12g}")
    return v + 0.0


def small(x: float) -> float:
    return float(f"{float(x):.3g}") + 0.0


def load_schema() -> dict:
    return json.loads(resources.files("spectral_kit").joinpath("report_schema.json").read_text())


class Timer:
    def __init__(self):
        self.ms: dict[str, float] = {}

    @contextmanager
    def phase(self, name: str):
        t0 = time.perf_counter()
        try:
            yield
        finally:
            self.ms[name] = round((time.perf_counter() - t0) * 1000, 3)


def make_report(command: str, params: dict, results: list[dict], timer: Timer) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": params,
        "results": results,
        "timings": dict(timer.ms),
    }


def dumps(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def results_bytes(report: dict) -> bytes:
    """The deterministic part of a report, serialised canonically."""
    return json.dumps(report["results"], sort_keys=True, separators=(",", ":")).encode()


def spectrum_record(g: Graph, sr: SpectralResult, analysed: str) -> dict:
    eig = [
        {"value": num(lam), "residual": small(eigen_residual(g, lam, sr.vectors[:, k]))}
        for k, lam in enumerate(sr.eigenvalues)
    ]
    return {
        "graph": to_graph6(g),
        "analysed": analysed,
        "n": g.n,
        "edges": g.num_edges(),
        "eigenvalues": eig,
        "least": {
            "value": num(sr.least_value),
            "residual": small(eigen_residual(g, sr.least_value, sr.least_vector)),
            "vector": [num(v) for v in sr.least_vector],
            "gap": num(sr.least_gap) if g.n > 1 else None,
        },
        "spectral_radius": num(sr.spectral_radius),
    }


def search_record(r: SearchResult) -> dict:
    if r.witnesses:
        gc = complement(r.witnesses[0])
        sr = least_eigenpair(gc)
        residual = small(eigen_residual(gc, sr.least_value, sr.least_vector))
    else:
        residual = None
    return {
        "n": r.n,
        "kappa": r.kappa,
        "class_size": r.class_size,
        "min_value": {"value": num(r.min_value), "residual": residual},
        "predicted": num(r.predicted),
        "regime": "n<2kappa" if r.n < 2 * r.kappa else "n>=2kappa",
        "verdict": r.verdict,
        "b1_witness": r.b1_witness,
        "labeled_witnesses": r.labeled_witnesses,
        "witnesses": [to_graph6(g) for g in r.witnesses],
    }


def claims_record(g: Graph, rep: ClaimReport) -> dict:
    return {
        "graph": to_graph6(g),
        "n": g.n,
        "kappa": rep.kappa,
        "cut": list(rep.cut),
        "v_plus": list(rep.v_plus),
        "v_minus": list(rep.v_minus),
        "least": {
            "value": num(rep.least_value),
            "residual": small(
                eigen_residual(complement(g), rep.least_value, np.asarray(rep.least_vector))
            ),
            "vector": [num(v) for v in rep.least_vector],
        },
        "degenerate": rep.degenerate,
        "claims": {k: {"status": c.status, "detail": c.detail} for k, c in sorted(rep.claims.items())},
    }


GRID_COLUMNS = ["n", "kappa", "class_size", "min_value", "predicted", "verdict", "b1_witness", "labeled_witnesses"]


def grid_csv(results: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(GRID_COLUMNS)
    for r in results:
        row = dict(r, min_value=r["min_value"]["value"])
        w.writerow(["" if row[c] is None else row[c] for c in GRID_COLUMNS])
    return buf.getvalue()
