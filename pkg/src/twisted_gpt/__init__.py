"""Rank-metric codes, the GPT cryptosystem with twisted Gabidulin codes, and
structural attacks against it."""

from .field import GF, FieldError, FieldMismatch, NonDivisorDegree, NoChainDeclared, parse_descriptor
from .linpoly import LinearizedPolynomial, annihilator, moore_matrix
from .codes import (
    GabidulinCode,
    TwistedGabidulinCode,
    DecodingFailure,
    InfeasibleParameters,
    bruteforce_min_distance,
    bruteforce_rank_decode,
    chain_field,
    gab_decode,
    random_gabidulin,
    sample_resistant_code,
    sample_twisted_code,
    validate_mrd_chain,
    validate_overbeck_conditions,
)
from .qsum import QSumProfile, classify, predicted_profile, profile, qsum_dimension
from .gpt import GptPublicKey, GptSecretKey, decrypt, encrypt, keygen
from .attacks import (
    AttackReport,
    estimate_security,
    exponential_attack,
    overbeck_attack,
    work_factor_exponential,
)
from .params import SystemParams, feasible_params, key_size, render_table

__version__ = "0.1.0"

__all__ = [
    "GF", "FieldError", "FieldMismatch", "NonDivisorDegree", "NoChainDeclared", "parse_descriptor",
    "LinearizedPolynomial", "annihilator", "moore_matrix",
    "GabidulinCode", "TwistedGabidulinCode", "DecodingFailure", "InfeasibleParameters",
    "bruteforce_min_distance", "bruteforce_rank_decode", "chain_field", "gab_decode",
    "random_gabidulin", "sample_resistant_code", "sample_twisted_code",
    "validate_mrd_chain", "validate_overbeck_conditions",
    "QSumProfile", "classify", "predicted_profile", "profile", "qsum_dimension",
    "GptPublicKey", "GptSecretKey", "decrypt", "encrypt", "keygen",
    "AttackReport", "estimate_security", "exponential_attack", "overbeck_attack",
    "work_factor_exponential",
    "SystemParams", "feasible_params", "key_size", "render_table",
]
