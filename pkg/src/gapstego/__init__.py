"""Steganography in the gap structure of secret numerical semigroups.

The sender and receiver share a private generating set.  Payload bytes
travel as integers that are gaps of the shared semigroup, chosen so the
residue of each value mod 16 carries one nibble; anyone without the key
sees a stream of integers whose residues are uniform and whose values sit
in a set of density one half.
"""

from __future__ import annotations

from .analysis import (
    AnalysisReport,
    build_report,
    chi2_critical,
    chi_square_uniformity,
    gap_density,
    residue_histogram,
    window_bernoulli,
    window_gap_fraction,
)
from .codec import (
    CipherStream,
    GapIndex,
    SaltSpec,
    build_gap_index,
    decode_byte,
    decode_message,
    desalt_stream,
    encode_message,
    encode_nibble,
    measure_salt_gap_preservation,
    salt_stream,
    verify_stream,
)
from .errors import (
    DegenerateProgressionError,
    ElementOneError,
    EmptyClassError,
    EmptySetError,
    EvenFrobeniusError,
    FormatError,
    GapstegoError,
    GcdNotOneError,
    InsufficientSamplesError,
    LimitError,
    MissingSaltPeriodError,
    NegativeInputError,
    NonPositiveElementError,
    NotCoprimeError,
    ValueExceedsPeriodError,
    ViabilityFailure,
    WindowExceedsRangeError,
)
from .formats import (
    KeyFile,
    parse_key,
    parse_stream,
    serialize_key,
    serialize_stream,
)
from .formulas import (
    BoundReport,
    GeometricSpec,
    ProgressionSpec,
    davison_check,
    geometric_frobenius,
    progression_frobenius,
    sigma,
    sylvester,
    symmetric_genus,
    wilf_check,
)
from .keygen import (
    KeyViability,
    KeygenParams,
    check_viability,
    choose_salt_pair,
    generate_key,
)
from .semigroup import (
    GeneratingSet,
    MembershipSieve,
    SemigroupTable,
    brute_force_sieve,
    build_table,
    is_telescopic,
    minimal_generators,
    validate_generators,
)

__version__ = "0.1.0"

__all__ = [
    "AnalysisReport",
    "BoundReport",
    "CipherStream",
    "DegenerateProgressionError",
    "ElementOneError",
    "EmptyClassError",
    "EmptySetError",
    "EvenFrobeniusError",
    "FormatError",
    "GapIndex",
    "GapstegoError",
    "GcdNotOneError",
    "GeneratingSet",
    "GeometricSpec",
    "InsufficientSamplesError",
    "KeyFile",
    "KeyViability",
    "KeygenParams",
    "LimitError",
    "MembershipSieve",
    "MissingSaltPeriodError",
    "NegativeInputError",
    "NonPositiveElementError",
    "NotCoprimeError",
    "ProgressionSpec",
    "SaltSpec",
    "SemigroupTable",
    "ValueExceedsPeriodError",
    "ViabilityFailure",
    "WindowExceedsRangeError",
    "brute_force_sieve",
    "build_gap_index",
    "build_report",
    "build_table",
    "check_viability",
    "chi2_critical",
    "chi_square_uniformity",
    "choose_salt_pair",
    "davison_check",
    "decode_byte",
    "decode_message",
    "desalt_stream",
    "encode_message",
    "encode_nibble",
    "gap_density",
    "generate_key",
    "geometric_frobenius",
    "is_telescopic",
    "measure_salt_gap_preservation",
    "minimal_generators",
    "parse_key",
    "parse_stream",
    "progression_frobenius",
    "residue_histogram",
    "salt_stream",
    "serialize_key",
    "serialize_stream",
    "sigma",
    "sylvester",
    "symmetric_genus",
    "validate_generators",
    "verify_stream",
    "wilf_check",
    "window_bernoulli",
    "window_gap_fraction",
]
