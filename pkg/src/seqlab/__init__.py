"""seqlab: complexity measures of binary sequences and the machinery to
cross-check the relations between them.

The public surface re-exports the working set; the submodules stay
importable for everything else.
"""

from .adic import (
    AdicValue,
    ApproxPair,
    adic_min,
    adic_minima,
    adic_oracle,
    adic_profile,
    connection,
    phi2,
    phi2_symmetric,
)
from .errors import SeqLabError
from .generators import (
    IDENTITY,
    PolySpec,
    SeqSpec,
    along_polynomial,
    fcsr_bit,
    fcsr_word,
    legendre_period,
    legendre_word,
    lfsr_period,
    lfsr_word,
    materialize,
    pattern_bit,
    pattern_word,
    periodic_sequence,
    rudin_shapiro_word,
    thue_morse_word,
    zeckendorf_bit,
    zeckendorf_word,
)
from .maxorder import (
    CosetSet,
    MocResult,
    MocWitness,
    coset,
    ell_moduli,
    ell_period,
    moc,
    moc_ell_formula,
    moc_from_coset,
    moc_oracle,
    moc_periodic,
    moc_profile,
)
from .measures import (
    CorrelationWitness,
    correlation2,
    correlation_k,
    expansion_complexity,
    linear_complexity_periodic,
    linear_profile,
)
from .relations import (
    ScanPoint,
    ScanReport,
    VerificationReport,
    conjecture_scan,
    lemma3_scan,
    reproduce_table,
    run_all,
    verify_cor1,
    verify_lemma1,
    verify_lowerbound,
    verify_msequence,
    verify_thm1,
    verify_thm2,
    verify_thm4,
    verify_thm5,
    verify_thm6,
)
from .seqcore import (
    PeriodicSequence,
    Profile,
    RationalRep,
    Word,
    least_period,
    prefix_value,
    read_bits,
    reverse_period,
    write_bits,
)

__version__ = "0.1.0"

__all__ = [
    "AdicValue",
    "ApproxPair",
    "CorrelationWitness",
    "CosetSet",
    "IDENTITY",
    "MocResult",
    "MocWitness",
    "PeriodicSequence",
    "PolySpec",
    "Profile",
    "RationalRep",
    "ScanPoint",
    "ScanReport",
    "SeqLabError",
    "SeqSpec",
    "VerificationReport",
    "Word",
    "adic_min",
    "adic_minima",
    "adic_oracle",
    "adic_profile",
    "along_polynomial",
    "conjecture_scan",
    "connection",
    "correlation2",
    "correlation_k",
    "coset",
    "ell_moduli",
    "ell_period",
    "expansion_complexity",
    "fcsr_bit",
    "fcsr_word",
    "least_period",
    "legendre_period",
    "legendre_word",
    "lemma3_scan",
    "lfsr_period",
    "lfsr_word",
    "linear_complexity_periodic",
    "linear_profile",
    "materialize",
    "moc",
    "moc_ell_formula",
    "moc_from_coset",
    "moc_oracle",
    "moc_periodic",
    "moc_profile",
    "pattern_bit",
    "pattern_word",
    "periodic_sequence",
    "phi2",
    "phi2_symmetric",
    "prefix_value",
    "read_bits",
    "reproduce_table",
    "reverse_period",
    "rudin_shapiro_word",
    "run_all",
    "thue_morse_word",
    "verify_cor1",
    "verify_lemma1",
    "verify_lowerbound",
    "verify_msequence",
    "verify_thm1",
    "verify_thm2",
    "verify_thm4",
    "verify_thm5",
    "verify_thm6",
    "write_bits",
    "zeckendorf_bit",
    "zeckendorf_word",
]
