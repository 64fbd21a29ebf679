"""Radial wave laboratory: build exterior Neumann/Dirichlet data, measure
radial Sobolev norms, and run leapfrog exterior solves against the exact
reference solution."""

from radwave._core import (
    BoundaryKind,
    CauchyDataPair,
    EnergyReport,
    ExteriorProblem,
    RadialGrid,
    RadialProfile,
    RegularityTag,
    SobolevOrder,
    TraceKind,
    WaveField,
    beta,
    boundary_trace,
    chi,
    cutoff_truncate,
    dirichlet_data,
    energies,
    extend,
    field_distance,
    fit_rate,
    hardy_ratio,
    make_grid,
    make_pair,
    neumann_data,
    norms,
    pair_distance,
    radial_mollify,
    reference_cauchy,
    sample_profile,
    solve,
    validate_warp,
)

__all__ = [
    "BoundaryKind",
    "CauchyDataPair",
    "EnergyReport",
    "ExteriorProblem",
    "RadialGrid",
    "RadialProfile",
    "RegularityTag",
    "SobolevOrder",
    "TraceKind",
    "WaveField",
    "beta",
    "boundary_trace",
    "chi",
    "cutoff_truncate",
    "dirichlet_data",
    "energies",
    "extend",
    "field_distance",
    "fit_rate",
    "hardy_ratio",
    "make_grid",
    "make_pair",
    "neumann_data",
    "norms",
    "pair_distance",
    "radial_mollify",
    "reference_cauchy",
    "sample_profile",
    "solve",
    "validate_warp",
]
