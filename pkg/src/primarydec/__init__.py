"""Primary decomposition of ideals and modules over Q[x1..xn]."""

from .polyring import (
    DEGREVLEX,
    LEX,
    FreeElement,
    MonomialOrder,
    Polynomial,
    PolyMatrix,
    Rational,
    RingContext,
    RingError,
    Submodule,
    full_module,
    ideal,
    ideal_generators,
    leading_term,
    render_polynomial,
    unit_vector,
    zero_module,
)
from .groebner import (
    GroebnerBasis,
    annihilator,
    buchberger,
    canonical,
    codim,
    eliminate,
    independent_sets,
    intersect,
    intersect_many,
    is_member,
    is_sub,
    is_unit_ideal,
    krull_dim,
    lift,
    module_equal,
    modulo_kernel,
    normal_form,
    quotient,
    quotient_by_ideal,
    saturate,
    syzygies,
)
from .unifactor import is_irreducible, univariate_factor
from .homology import (
    CanonMapResult,
    ExtModule,
    HomologyError,
    ass_prim_codim,
    canon_map,
    equidim_hull,
    ext_module,
    free_resolution,
    presentation_resolution,
    rem_comp,
)
from .decompose import (
    Component,
    DecompositionError,
    DecompositionResult,
    inter_ass_prim,
    localize_module,
    min_ass,
    primary_component,
    primary_decomposition,
    radical_equidim,
)
from .verify import (
    ValidationReport,
    membership_oracle,
    monomial_hull_oracle,
    monomial_minimal_primes,
    monomial_primdec_oracle,
    validate_decomposition,
)
from .cli import ScriptError, main, parse_polynomial, parse_script, run_script

__all__ = [
    "DEGREVLEX",
    "LEX",
    "CanonMapResult",
    "Component",
    "DecompositionError",
    "DecompositionResult",
    "ExtModule",
    "FreeElement",
    "GroebnerBasis",
    "HomologyError",
    "MonomialOrder",
    "PolyMatrix",
    "Polynomial",
    "Rational",
    "RingContext",
    "RingError",
    "ScriptError",
    "Submodule",
    "ValidationReport",
    "annihilator",
    "ass_prim_codim",
    "buchberger",
    "canon_map",
    "canonical",
    "codim",
    "eliminate",
    "equidim_hull",
    "ext_module",
    "free_resolution",
    "full_module",
    "ideal",
    "ideal_generators",
    "independent_sets",
    "inter_ass_prim",
    "intersect",
    "intersect_many",
    "is_irreducible",
    "is_member",
    "is_sub",
    "is_unit_ideal",
    "krull_dim",
    "leading_term",
    "lift",
    "localize_module",
    "main",
    "membership_oracle",
    "min_ass",
    "module_equal",
    "modulo_kernel",
    "monomial_hull_oracle",
    "monomial_minimal_primes",
    "monomial_primdec_oracle",
    "normal_form",
    "parse_polynomial",
    "parse_script",
    "presentation_resolution",
    "primary_component",
    "primary_decomposition",
    "quotient",
    "quotient_by_ideal",
    "radical_equidim",
    "render_polynomial",
    "rem_comp",
    "run_script",
    "saturate",
    "syzygies",
    "unit_vector",
    "univariate_factor",
    "validate_decomposition",
    "zero_module",
]

__version__ = "0.1.0"
