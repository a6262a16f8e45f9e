"""Latin squares, complete mappings and prolongations."""

from ._latsq import (
    IsotopyWitness,
    LatinSquare,
    MappingClassification,
    MappingKind,
    ParseError,
    Permutation,
    Prolongation,
    ScanReport,
    apply_isotopy,
    are_isotopic,
    brualdi_scan,
    classify,
    compose,
    conjugate,
    cyclic_table,
    enumerate_reduced_squares,
    find_complete_mappings,
    find_quasicomplete_mappings,
    klein_table,
    max_partial_transversal,
    max_partial_transversal_length,
    parse,
    prolong_any,
    prolong_belyavskaya,
    prolong_classical,
    prolong_classical_idempotent,
    prolong_deriyenko_dudek,
    to_text,
    transversal_to_mapping,
    validate_rows,
    verify_witness,
)

__all__ = [
    "IsotopyWitness",
    "LatinSquare",
    "MappingClassification",
    "MappingKind",
    "ParseError",
    "Permutation",
    "Prolongation",
    "ScanReport",
    "apply_isotopy",
    "are_isotopic",
    "brualdi_scan",
    "classify",
    "compose",
    "conjugate",
    "cyclic_table",
    "enumerate_reduced_squares",
    "find_complete_mappings",
    "find_quasicomplete_mappings",
    "klein_table",
    "max_partial_transversal",
    "max_partial_transversal_length",
    "parse",
    "prolong_any",
    "prolong_belyavskaya",
    "prolong_classical",
    "prolong_classical_idempotent",
    "prolong_deriyenko_dudek",
    "to_text",
    "transversal_to_mapping",
    "validate_rows",
    "verify_witness",
]
