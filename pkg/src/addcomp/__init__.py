"""Additive complements of finite sets: structured-form detection, explicit
complement constructions, exact cyclic tiling search, and a brute-force
verification harness.  All arithmetic is exact (Python ints)."""

from .complement import (
    PeriodicSet,
    block_complement_pair,
    canonical_complement,
    greedy_complement,
)
from .finset import (
    FiniteSet,
    FormWitness,
    SetParseError,
    cyclotomic_form_witness,
    detect_form,
    is_prime,
    parse_set,
    realize_form,
)
from .harness import (
    DeficitTrace,
    DivergenceReport,
    RepProfile,
    deficit_trace,
    detect_periodicity,
    divergence_probe,
    rep_profile,
    representation,
)
from .intpoly import IntPolynomial, NonMonicDivisorError, cyclotomic, mul_mod_cyclic
from .tiling import (
    CyclicTiling,
    IdentityReport,
    build_complement_from_tiling,
    find_cyclic_complement,
    periodic_identity_check,
    search_cyclic_complements,
)

__version__ = "0.1.0"

__all__ = [
    "CyclicTiling",
    "DeficitTrace",
    "DivergenceReport",
    "FiniteSet",
    "FormWitness",
    "IdentityReport",
    "IntPolynomial",
    "NonMonicDivisorError",
    "PeriodicSet",
    "RepProfile",
    "SetParseError",
    "block_complement_pair",
    "build_complement_from_tiling",
    "canonical_complement",
    "cyclotomic",
    "cyclotomic_form_witness",
    "deficit_trace",
    "detect_form",
    "detect_periodicity",
    "divergence_probe",
    "find_cyclic_complement",
    "greedy_complement",
    "is_prime",
    "mul_mod_cyclic",
    "parse_set",
    "periodic_identity_check",
    "realize_form",
    "rep_profile",
    "representation",
    "search_cyclic_complements",
]
