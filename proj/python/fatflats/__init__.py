"""Exact computations for fat flats in projective space."""

from ._core import (
    appendix_ids,
    bounds,
    conditions_count,
    cremona_transform,
    e_certify,
    e_empirical,
    g_value,
    gamma_points,
    hilbert_function,
    hilbert_poly,
    hilbert_poly_mixed,
    identity_check,
    lambda_poly,
    nosymetry,
    reduce,
    replay,
    self_intersection,
    set_threads,
    threads,
)

__all__ = [name for name in dir() if not name.startswith("_")]
