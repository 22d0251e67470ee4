"""Exact tight/semitight classification of the canonical divided-power
monomial attached to a dominant weight, via two independent engines: a
bilinear-form oracle for small weights in types A2..A5 and D4, and a
closed-form quadratic-form zero count for all of type A5.
"""

from .a5 import (
    A5Report,
    SosDecomp,
    TightConditionsMismatch,
    ZTuple,
    classify,
    count_defect_zeros,
    defect_expanded,
    defect_sos,
    defect_zero_family,
    domain_size,
    enumerate_defect_zeros,
    in_domain,
    iter_domain,
    min_defect,
    tight_conditions,
)
from .form import (
    Combination,
    ConstantTermNotPositiveInteger,
    DegreeCapExceeded,
    Verdict,
    VerdictKind,
    WeightTooLarge,
    classify_form,
    classify_oracle,
    equal_by_pairing,
    form_monomials,
    form_words,
    multinomial,
    phi,
    words_of_content,
)
from .laurent import (
    LaurentPoly,
    RatFunc,
    Regularity,
    brace,
    brace_binom,
    brace_fact,
    eval_at_vinv0,
    qfact,
    qint,
    v_power,
)
from .roots import (
    CartanSpec,
    InvalidWord,
    Monomial,
    NonDominantWeight,
    ReducedWord,
    RootVec,
    Weight,
    exponent_sequence,
    pairing,
    reflect,
    validate_w0_word,
    weight_of_monomial,
    xlambda,
)

__version__ = "0.1.0"
