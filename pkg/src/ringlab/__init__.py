"""Finite commutative rings, ideal expansions, and absorbing-ideal checks."""

from __future__ import annotations

from .catalog import Catalog, CatalogConfig, CatalogEntry, base_rings, build_catalog
from .constructions import (
    FiniteModule,
    Localization,
    LocalizationOf,
    MultiplicativeSet,
    ProductOf,
    QuotientOf,
    TrivialExtensionOf,
    localize,
    make_product,
    make_quotient,
    make_trivial_extension,
    module_product,
    quotient_module,
    quotient_projection,
    regular_module,
)
from .errors import (
    ConstructionError,
    ExpansionAxiomError,
    ParseError,
    ProperIdealError,
    RingMismatchError,
    RinglabError,
    TableError,
    UnknownTheoremError,
)
from .expansions import (
    ExpansionFunction,
    commutes_with_scaling,
    constant_ring,
    delta_gamma_hom_check,
    from_rule,
    identity_expansion,
    induced_localization,
    induced_product,
    induced_quotient,
    induced_trivial_extension,
    is_delta_gamma_hom,
    is_idempotent_at,
    is_intersection_preserving,
    is_prime_expansion,
    localization_compatibility,
    plus_fixed,
    preserves_jacobson,
    radical_expansion,
    satisfies_star,
    scaling_check,
    standard_expansions,
)
from .ideals import (
    Ideal,
    all_ideals,
    colon,
    generator_list,
    ideal_colon,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    is_ideal_mask,
    is_maximal,
    is_prime,
    is_prime_element,
    is_primary,
    is_principal,
    is_radical_ideal,
    principal_generator,
    radical,
    span,
)
from .predicates import (
    DELTA_FREE,
    PREDICATE_NAMES,
    PREDICATES,
    ClassifyRow,
    classify,
    delta_primary_check,
    delta_semiprimary_check,
    evaluate_predicate,
    idealwise_one_absorbing_check,
    idealwise_one_absorbing_scan,
    is_delta_primary,
    is_delta_semiprimary,
    is_one_absorbing_delta_primary,
    is_one_absorbing_primary,
    is_one_absorbing_prime,
    is_two_absorbing,
    is_two_absorbing_delta_primary,
    one_absorbing_delta_primary_check,
    one_absorbing_delta_primary_scan,
    one_absorbing_prime_check,
    one_absorbing_primary_check,
    two_absorbing_check,
    two_absorbing_delta_primary_check,
)
from .rings import (
    Element,
    FiniteRing,
    RingHom,
    identity_hom,
    irreducible_poly,
    make_galois_field,
    make_poly_quotient,
    make_zn,
)
from .specparse import Query, parse_expansion, parse_query, parse_ring
from .verifier import (
    THEOREM_IDS,
    TheoremReport,
    Witness,
    search_witness,
    verify,
    verify_all,
)

__version__ = "0.1.0"
