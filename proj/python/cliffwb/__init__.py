"""Clifford-analysis verification workbench."""

import json

from ._core import (
    ConfigError,
    ConvergenceError,
    DegenerateSampleError,
    DomainError,
    Error,
    Multivector,
    SignatureMismatch,
    SingularityError,
    bergman_kernel,
    blade_product,
    build_rule,
    cauchy_kernel,
    cauchy_normalization,
    default_tolerances,
    embed_point,
    intertwined_symmetric_power,
    mean_value_constant,
    parse_mass,
    run_suite_json,
    suite_names,
    symmetric_power,
)


def run_suite(suite, **kwargs):
    """Run a verification suite and return the parsed report."""
    return json.loads(run_suite_json(suite, **kwargs))


__all__ = [name for name in dir() if not name.startswith("_")]
