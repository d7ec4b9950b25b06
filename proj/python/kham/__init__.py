"""Degree thresholds and Hamiltonicity checks for balanced k-partite graphs."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    GuardExceeded,
    Graph,
    ParseError,
    block_partition,
    build_f2,
    build_family,
    chvatal_condition,
    decode,
    from_graph6,
    hamiltonian_cycle,
    independence_number,
    is_exception,
    isomorphic,
    non_hamiltonicity_witness,
    recognize,
    required_degree,
    rounding,
    run_cli,
    theorem_threshold,
    vertex_connectivity,
)

__version__ = "0.1.0"


def cfgjl_bound(n, k):
    num, den = _core.cfgjl_bound_parts(n, k)
    return Fraction(num, den)


def threshold_profile(n, k):
    return {
        "n": n,
        "k": k,
        "m": n // k,
        "threshold": theorem_threshold(n, k),
        "cfgjl_bound": cfgjl_bound(n, k),
        "rounding": rounding(n, k),
        "exception": is_exception(n, k),
        "required_degree": required_degree(n, k),
    }


def exhaustive_report(n, k, floor=None, shard=0, shards=1, jobs=1, list_cap=100):
    return json.loads(_core.exhaustive_report(n, k, floor, shard, shards, jobs, list_cap))


def sample_report(n, k, trials, seed, floor=None):
    return json.loads(_core.sample_report(n, k, trials, seed, floor))


def characterization_report(n=8, k=4, jobs=1):
    return json.loads(_core.characterization_report(n, k, jobs))


def facts_report(k_max, m_max):
    return json.loads(_core.facts_report(k_max, m_max))
