"""Finite residuated lattices: validation, filters and spectra, quotients,
class membership, exhaustive enumeration."""

from reslat.algebra import (
    INFINITE,
    AlgebraSpec,
    Morphism,
    ResiduatedLattice,
    boolean_center,
    direct_product,
    from_tables,
    isomorphic,
    subalgebra,
    validate,
)
from reslat.classify import ClassificationReport, Verdict, classification_report
from reslat.corpus import builtin, builtin_algebra, dumps, export_hasse, load, loads, save
from reslat.enumeration import enumerate_lattices, enumerate_residuated, hunt
from reslat.errors import ReslatError
from reslat.filters import Filter, all_filters, dense_elements, maximal_filters, prime_filters, radical
from reslat.kernels import BACKEND
from reslat.quotients import dense_quotient, has_lifting_boolean_center, quotient, radical_quotient

__version__ = "0.1.0"

__all__ = [
    "INFINITE", "AlgebraSpec", "Morphism", "ResiduatedLattice", "boolean_center",
    "direct_product", "from_tables", "isomorphic", "subalgebra", "validate",
    "ClassificationReport", "Verdict", "classification_report",
    "builtin", "builtin_algebra", "dumps", "export_hasse", "load", "loads", "save",
    "enumerate_lattices", "enumerate_residuated", "hunt", "ReslatError",
    "Filter", "all_filters", "dense_elements", "maximal_filters", "prime_filters", "radical",
    "BACKEND", "dense_quotient", "has_lifting_boolean_center", "quotient", "radical_quotient",
]
