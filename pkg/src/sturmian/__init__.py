"""Words built by iterated palindromic closure, their arithmetic, and extremal laws.

The package covers four layers:

- words: periods, palindromes, slopes, Fibonacci numbers;
- palindromization: the closure map psi, its inverse, the companion
  morphisms, and infinite directive streams;
- families: central, standard, and Christoffel words with certificates
  and factorizations;
- arithmetic + oracle: continuant evaluation of image statistics and
  exhaustive verification that the alternating directive is extremal.
"""

from ._kernels import BACKEND
from .arithmetic import (
    ConvergentTable,
    IntRep,
    bcount_from_directive,
    cf_eval,
    christoffel_length_from_directive,
    continuant,
    convergents,
    from_integral,
    minimal_period_from_directive,
    psi_stats_from_directive,
    slope_from_directive,
    to_integral,
    validate_cf,
    validate_integral,
)
from .config import (
    ARITHMETIC_ORDER_BOUND,
    DEFAULT_MAX_WORD_LEN,
    MATERIALIZED_ORDER_BOUND,
    max_word_len,
    set_max_word_len,
)
from .errors import (
    BoundExceededError,
    MaterializationLimitError,
    NotCentralError,
    NotChristoffelError,
    NotStandardError,
    SturmianError,
)
from .families import (
    CentralCertificate,
    ChristoffelFactorization,
    StandardSequence,
    central_certificate,
    central_decompose,
    christoffel,
    christoffel_factorize,
    count_central,
    is_central,
    is_christoffel,
    is_standard,
    standard_decompose,
    standard_from_coefficients,
)
from .oracle import (
    ExtremalReport,
    central_length_census,
    directive_images,
    expected_continuant_max,
    expected_max_bcount,
    expected_max_length,
    expected_max_period,
    expected_period_continuant_max,
    fib_lemma_holds_at,
    harmonic_at,
    period_continuant_equality_lists,
    stream_rows,
    verify_central_count,
    verify_characteristic_extremal_streams,
    verify_continuant_max,
    verify_fib_lemma,
    verify_harmonic_fibonacci,
    verify_max_bcount,
    verify_max_length,
    verify_max_period,
    verify_period_continuant_max,
)
from .palindromization import (
    DirectiveSpec,
    PsiStream,
    directive_word_of,
    exchange_E,
    fibonacci_directive_prefix,
    justin_check,
    mu,
    op_c,
    op_d,
    p_x,
    palindromic_closure,
    psi,
    psi_stream,
    psi_stream_advance,
    stream_prefix,
)
from .words import (
    ALPHABET,
    RATIONAL_INF,
    Rational,
    Word,
    check_word,
    count_letter,
    fibonacci,
    fine_wilf_collapse,
    has_period,
    is_lyndon,
    is_palindrome,
    minimal_period,
    reverse,
    slope_eta,
)

__version__ = "0.1.0"

__all__ = [
    "ALPHABET",
    "ARITHMETIC_ORDER_BOUND",
    "BACKEND",
    "BoundExceededError",
    "CentralCertificate",
    "ChristoffelFactorization",
    "ConvergentTable",
    "DEFAULT_MAX_WORD_LEN",
    "DirectiveSpec",
    "ExtremalReport",
    "IntRep",
    "MATERIALIZED_ORDER_BOUND",
    "MaterializationLimitError",
    "NotCentralError",
    "NotChristoffelError",
    "NotStandardError",
    "PsiStream",
    "RATIONAL_INF",
    "Rational",
    "StandardSequence",
    "SturmianError",
    "Word",
    "bcount_from_directive",
    "central_certificate",
    "central_decompose",
    "central_length_census",
    "cf_eval",
    "check_word",
    "christoffel",
    "christoffel_factorize",
    "christoffel_length_from_directive",
    "continuant",
    "convergents",
    "count_central",
    "count_letter",
    "directive_images",
    "directive_word_of",
    "exchange_E",
    "expected_continuant_max",
    "expected_max_bcount",
    "expected_max_length",
    "expected_max_period",
    "expected_period_continuant_max",
    "fib_lemma_holds_at",
    "fibonacci",
    "fibonacci_directive_prefix",
    "fine_wilf_collapse",
    "from_integral",
    "harmonic_at",
    "has_period",
    "is_central",
    "is_christoffel",
    "is_lyndon",
    "is_palindrome",
    "is_standard",
    "justin_check",
    "max_word_len",
    "minimal_period",
    "minimal_period_from_directive",
    "mu",
    "op_c",
    "op_d",
    "p_x",
    "palindromic_closure",
    "period_continuant_equality_lists",
    "psi",
    "psi_stats_from_directive",
    "psi_stream",
    "psi_stream_advance",
    "reverse",
    "set_max_word_len",
    "slope_eta",
    "slope_from_directive",
    "standard_decompose",
    "standard_from_coefficients",
    "stream_prefix",
    "stream_rows",
    "to_integral",
    "validate_cf",
    "validate_integral",
    "verify_central_count",
    "verify_characteristic_extremal_streams",
    "verify_continuant_max",
    "verify_fib_lemma",
    "verify_harmonic_fibonacci",
    "verify_max_bcount",
    "verify_max_length",
    "verify_max_period",
    "verify_period_continuant_max",
    "__version__",
]
