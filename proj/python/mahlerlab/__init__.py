"""Python access to the mahlerlab checks."""

import json

from ._core import (
    MahlerlabError,
    dirichlet_L_deriv,
    hecke_traces,
    hurwitz_zeta,
    mahler_measure,
    scenarios,
    torus_zeros,
)
from ._core import run_scenario as _run_scenario


def run(scenario, **options):
    """Run a scenario and return the report as a dict.

    Options use the CLI names with dashes replaced by underscores, e.g. coeff_bound=90.
    """
    lines = [f"scenario = {scenario}"]
    for key, value in options.items():
        lines.append(f"{key.replace('_', '-')} = {value}")
    return json.loads(_run_scenario("\n".join(lines)))


__all__ = [
    "MahlerlabError",
    "dirichlet_L_deriv",
    "hecke_traces",
    "hurwitz_zeta",
    "mahler_measure",
    "run",
    "scenarios",
    "torus_zeros",
]
