from .model import (EllipticalModel, Family, FamilyKind, ar1_scatter,
                    ar1_sphericity, sample)
from .population import (PopulationOracle, m_functional, one_step_c,
                         population_psi1, psi_expectation, radial_expectation,
                         shrunk_one_step, solve_sigma)

__all__ = [
    "EllipticalModel",
    "Family",
    "FamilyKind",
    "PopulationOracle",
    "ar1_scatter",
    "ar1_sphericity",
    "m_functional",
    "one_step_c",
    "population_psi1",
    "psi_expectation",
    "radial_expectation",
    "sample",
    "shrunk_one_step",
    "solve_sigma",
]
