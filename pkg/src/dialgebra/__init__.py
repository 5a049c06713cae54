"""Exact verification and structure analysis for twisted two-product
algebras given by structure constants.

The package represents a finite-dimensional algebra with two bilinear
products and a twisting endomorphism over exact rationals (or complex
doubles), checks the defining identities, solves for derivation and
centroid spaces, fingerprints algebras for isomorphism testing, and
ships a worked catalog of small examples with their published dimension
claims recorded for comparison.
"""

from .axioms import (AS_PRINTED, STANDARD, AxiomReport, IdentityRecord,
                     check_dendriform, check_dialgebra, check_dipterous,
                     check_multiplicativity, check_table_multiplicativity,
                     check_triple_system, check_zinbiel, find_bar_units)
from .catalog import (CatalogEntry, Satellite, VerificationReport,
                      check_satellite, entries, entry, get, ids, param_sweep,
                      pattern_generators, verify_all, verify_entry)
from .centroids import (FULL, LINEAR, CentroidResult, center, centralizer,
                        centroid, composition_audit)
from .constructions import (commutative_dendriform_to_zinbiel,
                            conjugate_automorphism_check, inverse_map,
                            is_automorphism, symmetrize_zinbiel, transport,
                            untwist_candidate, yau_twist_dipterous,
                            zinbiel_to_dendriform)
from .core import (LEFT, RIGHT, HomDialgebra, LinearMap, MultTable, Vector,
                   apply_map, compose, compose_table, map_power, product,
                   table_product, to_complex)
from .derivations import (ASSOCIATIVE, JORDAN, alpha_fixed_points, bracket,
                          bracket_check, central_derivation_space,
                          derivation_maps, derivation_space, inner_map,
                          is_derivation, triple_derivation_space)
from .fileformat import FileFormatError, load, parse, save, serialize
from .invariants import (FINGERPRINT_FIELDS, ISOMORPHIC, NON_ISOMORPHIC,
                         UNKNOWN, CompareVerdict, Fingerprint, compare,
                         fingerprint, fingerprint_mismatch, hom_residual,
                         iso_search)
from .scalars import COMPLEX, EPS, RATIONAL, format_scalar, parse_scalar

__version__ = "0.1.0"

__all__ = [
    "AS_PRINTED", "ASSOCIATIVE", "AxiomReport", "COMPLEX", "CatalogEntry",
    "CentroidResult", "CompareVerdict", "EPS", "FINGERPRINT_FIELDS", "FULL",
    "FileFormatError", "Fingerprint", "HomDialgebra", "ISOMORPHIC",
    "IdentityRecord", "JORDAN", "LEFT", "LINEAR", "LinearMap", "MultTable",
    "NON_ISOMORPHIC", "RATIONAL", "RIGHT", "STANDARD", "Satellite", "UNKNOWN",
    "Vector", "VerificationReport", "alpha_fixed_points", "apply_map",
    "bracket", "bracket_check", "center", "centralizer",
    "central_derivation_space", "centroid", "check_dendriform",
    "check_dialgebra", "check_dipterous", "check_multiplicativity",
    "check_satellite", "check_table_multiplicativity", "check_triple_system",
    "check_zinbiel", "commutative_dendriform_to_zinbiel", "compare",
    "compose", "compose_table", "composition_audit",
    "conjugate_automorphism_check", "derivation_maps", "derivation_space",
    "entries", "entry", "find_bar_units", "fingerprint",
    "fingerprint_mismatch", "format_scalar", "get", "hom_residual", "ids",
    "inner_map", "inverse_map", "is_automorphism", "is_derivation",
    "iso_search", "load", "map_power", "param_sweep", "parse",
    "parse_scalar", "pattern_generators", "product", "save", "serialize",
    "symmetrize_zinbiel", "table_product", "to_complex", "transport",
    "triple_derivation_space", "untwist_candidate", "verify_all",
    "verify_entry", "yau_twist_dipterous", "zinbiel_to_dendriform",
]
