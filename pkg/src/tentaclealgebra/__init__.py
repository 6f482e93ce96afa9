"""tentaclealgebra - polynomials of bounded growth on semialgebraic tentacles.

Computes semidegrees along Puiseux-type tentacles, key forms and the
finite-generation verdicts they imply, Hilbert bases for unions of standard
tentacles, bounded-growth witnesses and a sampling oracle for growth rates.
"""

__version__ = "0.1.0"

from .cones.basis import ConeBasisSolver
from .core.component import Component
from .core.workbench import Workbench
from .keyforms.lab import KeyFormLab
from .oracle.sampling import GrowthOracle
from .puiseux.expansion import PuiseuxExpander, SemidegreeSpec
from .semidegree.engine import SemidegreeEngine, StandardTentacleSpec, TentacleSet
from .witness.search import WitnessSearch

__all__ = [
    "Component",
    "ConeBasisSolver",
    "GrowthOracle",
    "KeyFormLab",
    "PuiseuxExpander",
    "SemidegreeEngine",
    "SemidegreeSpec",
    "StandardTentacleSpec",
    "TentacleSet",
    "Workbench",
    "WitnessSearch",
]
