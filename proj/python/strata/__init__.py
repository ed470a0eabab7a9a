"""Multiplicity-vector strata of monic real polynomials."""

import json as _json

from . import _core
from ._core import (
    StrataError,
    enumerate_mvs,
    graph_partial as _graph_partial,
    in_closure,
    multiplicity_vector,
    poset_dot,
    power_sums,
    resultant,
    stratum_count,
    validate_mv,
    vieta_coeffs,
)

__all__ = [
    "StrataError",
    "check_point",
    "enumerate_mvs",
    "graph_partial",
    "in_closure",
    "multiplicity_vector",
    "poset",
    "poset_dot",
    "power_sums",
    "resultant",
    "sample",
    "stratum_count",
    "swallowtail",
    "tangent_frame",
    "validate_mv",
    "verify_lemma",
    "vieta_coeffs",
]


def _point_text(point):
    return point if isinstance(point, str) else _json.dumps(point)


def poset(n):
    """Stratification poset of degree n as a dict with nodes and covers."""
    return _json.loads(_core.poset_json(n))


def sample(mv, n, seed=0):
    """A seeded point of the stratum, as the StratumPoint JSON dict."""
    return _json.loads(_core.sample_json(list(mv), n, seed))


def tangent_frame(point):
    return _json.loads(_core.tangent_frame_json(_point_text(point)))


def graph_partial(point, k, u):
    """db_k/db_u along the stratum of the point."""
    return _graph_partial(_point_text(point), k, u)


def check_point(point):
    return _json.loads(_core.check_point_json(_point_text(point)))


def verify_lemma(lemma, mv, n, seed=0, root_order="decreasing"):
    return _json.loads(_core.verify_lemma_json(lemma, list(mv), n, seed, root_order))


def swallowtail(resolution=11):
    return _json.loads(_core.swallowtail_json(resolution))
