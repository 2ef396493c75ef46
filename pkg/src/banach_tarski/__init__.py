"""Exact, finite verification of paradoxical decompositions.

Free-group words and the n-part partitions of F2 live in ``words`` and
``partition``; orbits with a cyclic stabiliser in ``orbit``; witnesses and
their validator in ``paradox``; rational rotations, sphere fragments and the
ball in ``geometry``.
"""

from .orbit import StabilizedOrbit, build_orbit_partition, canonical_form
from .paradox import ParadoxWitness, f2_paradox_witness, validate
from .partition import build_21gen, build_21tau, classify_base, gamma
from .report import Report
from .words import EMPTY, Word, enumerate_reduced, format_word, parse, reduce

__version__ = "0.1.0"

__all__ = [
    "EMPTY",
    "ParadoxWitness",
    "Report",
    "StabilizedOrbit",
    "Word",
    "build_21gen",
    "build_21tau",
    "build_orbit_partition",
    "canonical_form",
    "classify_base",
    "enumerate_reduced",
    "f2_paradox_witness",
    "format_word",
    "gamma",
    "parse",
    "reduce",
    "validate",
]
