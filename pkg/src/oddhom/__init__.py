"""List homomorphisms to odd cycles and triangle-free targets on graphs of bounded diameter."""

from .complexity import ComplexityCell, classify
from .errors import (
    AdjacentIdentification, CapExceeded, DiameterTooLarge, GenerationTimeout, HomError,
    Infeasible, PreconditionViolated, StructuralAssertionFailed,
)
from .graph import Graph
from .hardness import CnfFormula, GadgetGraph, build_hardness_instance, check_radius
from .instance import BcspInstance, CycleTarget, GeneralTarget, LHomInstance
from .oracle import GeneratorConfig, brute_force_lhom, random_instance, verify_hom
from .poly import solve_diameter_k_plus_1
from .reductions import reduce_exhaustively
from .subexp import solve_c5_diameter_5, solve_diameter_k_plus_2
from .trianglefree import solve_triangle_free

__all__ = [
    "AdjacentIdentification", "BcspInstance", "CapExceeded", "CnfFormula", "ComplexityCell",
    "CycleTarget", "DiameterTooLarge", "GadgetGraph", "GenerationTimeout", "GeneralTarget",
    "GeneratorConfig", "Graph", "HomError", "Infeasible", "LHomInstance", "PreconditionViolated",
    "StructuralAssertionFailed", "brute_force_lhom", "build_hardness_instance", "check_radius",
    "classify", "random_instance", "reduce_exhaustively", "solve_c5_diameter_5",
    "solve_diameter_k_plus_1", "solve_diameter_k_plus_2", "solve_triangle_free", "verify_hom",
]

__version__ = "0.1.0"
