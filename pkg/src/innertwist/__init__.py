"""Exact verification of central bialgebras and coquasitriangular structures
in braided categories of graded vector spaces over cyclotomic fields."""

from .catcore import BraidedContext, GradedObject, Morphism, StructuralError
from .central import CentralBialgebra, HalfBraiding
from .cqt import CqtStructure, check_cqt
from .examples import Example, ExampleSpec, build
from .fileformat import ParseError, Session, parse_structure_file, parse_structure_text
from .hopf import Algebra, Bialgebra, Coalgebra
from .report import CheckRecord, Report
from .scalars import CyclotomicField, CycScalar
from .suite import SuiteOptions, run_suite

__version__ = "0.1.0"

__all__ = [
    "BraidedContext", "GradedObject", "Morphism", "StructuralError",
    "CentralBialgebra", "HalfBraiding", "CqtStructure", "check_cqt",
    "Example", "ExampleSpec", "build", "ParseError", "Session",
    "parse_structure_file", "parse_structure_text", "Algebra", "Bialgebra", "Coalgebra",
    "CheckRecord", "Report", "CyclotomicField", "CycScalar", "SuiteOptions", "run_suite",
]
