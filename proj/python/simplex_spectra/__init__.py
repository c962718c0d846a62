"""Clique-complex Laplacian spectra and first cohomology (Python front end)."""
import json

from ._core import (
    CapExceeded,
    Graph,
    InputError,
    __version__,
    coboundary,
    complement,
    cycle_vector,
    generate,
    laplacian,
    parse_graph6,
    write_graph6,
)
from . import _core


def spectrum(graph, dim=1, kind="up"):
    """Certified spectrum as {size, eigs, residual}; eigs maps value -> multiplicity."""
    raw = json.loads(_core._spectrum_json(graph, dim, kind))
    raw["eigs"] = {e["value"]: e["mult"] for e in raw["eigs"]}
    return raw


def h1(graph, max_cycle_len=0):
    """dim H^1 of the clique complex plus checker verdicts."""
    return json.loads(_core._h1_json(graph, max_cycle_len))


def predict_triangular_L1(n):
    raw = json.loads(_core._predict_triangular_L1(n))
    return {e["value"]: e["mult"] for e in raw["eigs"] if e["mult"]}


__all__ = [
    "CapExceeded", "Graph", "InputError", "__version__", "coboundary", "complement",
    "cycle_vector", "generate", "h1", "laplacian", "parse_graph6", "predict_triangular_L1",
    "spectrum", "write_graph6",
]
