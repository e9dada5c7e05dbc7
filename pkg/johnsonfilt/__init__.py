from importlib.metadata import version as _get_version

from johnsonfilt import core
from johnsonfilt.core.automorphisms import (
    AutLetter,
    AutWord,
    Endomorphism,
    NotIAError,
    NotUpperTriangularError,
    SubgroupSpec,
    alpha,
    apply,
    autword_commutator,
    autword_compile,
    bigA,
    compose,
    identity_endomorphism,
    is_ia,
    project_pi,
    random_autword,
    rho,
    section_sigma,
    subgroup_generators,
    verify_commuting,
    verify_conjugation_action,
    verify_mccool,
    verify_projection,
)
from johnsonfilt.core.freegroup import (
    RankMismatchError,
    Word,
    abelianize,
    commutator,
    concat,
    invert,
    kill_generator,
    reverse,
)
from johnsonfilt.core.johnson import (
    Derivation,
    JohnsonDegree,
    derivation_apply,
    derivation_bracket,
    derivation_flatten,
    injectivity_matrix,
    is_in_johnson_filtration,
    johnson_degree,
    lambda_word,
    lambda_x,
    tau,
    verify_lie_morphism,
    verify_prop62,
)
from johnsonfilt.core.lielyndon import (
    LieElement,
    NotALieElementError,
    bracketing,
    expand_to_tensor,
    format_bracket,
    is_lyndon,
    lie_bracket,
    lie_to_lyndon,
    lyndon_words,
    random_lie_element,
    witt_rank,
    witt_rank_moebius,
)
from johnsonfilt.core.magnus import (
    FiltrationDegree,
    FiltrationError,
    filtration_degree,
    in_lower_central,
    leading_lie,
    magnus_expand,
)
from johnsonfilt.core.options import get_options, set_options
from johnsonfilt.core.parsing import ParseError, parse_autword, parse_word
from johnsonfilt.core.ranks import (
    RankTable,
    SeriesCoefficients,
    der_rank,
    ep_coeffs,
    gr_rank_psn,
    growth_check,
    hi_lower_bound,
    pbw_coefficients,
    summand_ranks,
    summand_ranks_q,
    witt_table,
)
from johnsonfilt.core.reports import VerificationReport
from johnsonfilt.core.tensorseries import (
    Series,
    degree_component,
    series_add,
    series_mul,
    series_sub,
)

__all__ = [
    "abelianize",
    "alpha",
    "apply",
    "AutLetter",
    "autword_commutator",
    "autword_compile",
    "AutWord",
    "bigA",
    "bracketing",
    "commutator",
    "compose",
    "concat",
    "core",
    "degree_component",
    "der_rank",
    "Derivation",
    "derivation_apply",
    "derivation_bracket",
    "derivation_flatten",
    "Endomorphism",
    "ep_coeffs",
    "expand_to_tensor",
    "filtration_degree",
    "FiltrationDegree",
    "FiltrationError",
    "format_bracket",
    "get_options",
    "gr_rank_psn",
    "growth_check",
    "hi_lower_bound",
    "identity_endomorphism",
    "in_lower_central",
    "injectivity_matrix",
    "invert",
    "is_ia",
    "is_in_johnson_filtration",
    "is_lyndon",
    "johnson_degree",
    "JohnsonDegree",
    "kill_generator",
    "lambda_word",
    "lambda_x",
    "leading_lie",
    "lie_bracket",
    "lie_to_lyndon",
    "LieElement",
    "lyndon_words",
    "magnus_expand",
    "NotALieElementError",
    "NotIAError",
    "NotUpperTriangularError",
    "parse_autword",
    "parse_word",
    "ParseError",
    "pbw_coefficients",
    "project_pi",
    "random_autword",
    "random_lie_element",
    "RankMismatchError",
    "RankTable",
    "reverse",
    "rho",
    "section_sigma",
    "Series",
    "series_add",
    "series_mul",
    "series_sub",
    "SeriesCoefficients",
    "set_options",
    "subgroup_generators",
    "SubgroupSpec",
    "summand_ranks",
    "summand_ranks_q",
    "tau",
    "VerificationReport",
    "verify_commuting",
    "verify_conjugation_action",
    "verify_lie_morphism",
    "verify_mccool",
    "verify_projection",
    "verify_prop62",
    "witt_rank",
    "witt_rank_moebius",
    "witt_table",
    "Word",
]

try:
    __version__ = _get_version("johnsonfilt")
except Exception:  # pragma: no cover
    # Local copy or not installed with setuptools.
    __version__ = "999"
