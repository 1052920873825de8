"""Exact Ollivier curvature, edge betweenness and average-distance analytics.

All exact quantities cross the C++/Python boundary as canonical "num/den"
strings; `as_fraction` converts them to `fractions.Fraction`.
"""

import json as _json
from fractions import Fraction

from graphcurv._core import (  # noqa: F401
    Graph,
    GraphError,
    analyze_json,
    average_degree,
    average_distance,
    build_graph,
    cartesian_product,
    check_sharpness,
    curvature_all_edges,
    curvature_oracle,
    edge_betweenness,
    fuzz_json,
    gen_cocktail_party,
    gen_complete,
    gen_cycle,
    gen_erdos_renyi_connected,
    gen_gosset,
    gen_halved_cube,
    gen_hypercube,
    gen_johnson,
    gen_path,
    gen_schlafli,
    is_isomorphic,
    is_reflective,
    ollivier_curvature,
    read_edge_list,
    reflectivity_report_json,
    separation_sets,
    write_edge_list,
)
from graphcurv._core import __version__  # noqa: F401


def as_fraction(text):
    """Parse a canonical "num/den" string into a Fraction."""
    return Fraction(text)


def analyze(graph, reflective=True, reflective_cap=500, threads=0, with_float=False):
    """Full report as a dict; exact fields are "num/den" strings."""
    return _json.loads(
        analyze_json(
            graph,
            reflective=reflective,
            reflective_cap=reflective_cap,
            threads=threads,
            with_float=with_float,
        )
    )


def fuzz_inequality(count=200, seed=42, n_min=4, n_max=24, p_min=0.2, p_max=0.8, threads=0):
    """Random-graph campaign report as a dict."""
    return _json.loads(
        fuzz_json(
            count=count,
            seed=seed,
            n_min=n_min,
            n_max=n_max,
            p_min=p_min,
            p_max=p_max,
            threads=threads,
        )
    )
