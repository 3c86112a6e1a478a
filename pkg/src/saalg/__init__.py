"""saalg: exact construction, verification, classification and
isomorphism testing of nilpotent symplectic alternating algebras of
dimension 10 over computable fields."""

from .field import (Field, PrimeField, ExtField, Rationals, QQ,
                    parse_field, FieldError)
from .core import (Presentation, SAAlgebra, expand, verify_axioms,
                   standard_gram, PresentationError)
from .families import (CanonicalForm, FamilyError, FAMILY_TAGS,
                       default_params, form_presentation, presentation)
from .structure import (centre, lower_central_series, product_space,
                        structure_report, upper_central_series)
from .classify import (canonicalize, centre4_type, extract_c_params,
                       scramble, totally_isotropic_plane, ClassifyError)
from .equivalence import (EquivDecision, GBeta, brute_force_iso,
                          count_classes, equiv_c, equiv_r, iso_witness,
                          necessity_check)

__all__ = [
    "Field", "PrimeField", "ExtField", "Rationals", "QQ", "parse_field",
    "FieldError", "Presentation", "SAAlgebra", "expand", "verify_axioms",
    "standard_gram", "PresentationError", "CanonicalForm", "FamilyError",
    "FAMILY_TAGS", "default_params", "form_presentation", "presentation",
    "centre", "lower_central_series", "product_space", "structure_report",
    "upper_central_series", "canonicalize", "centre4_type",
    "extract_c_params", "scramble", "totally_isotropic_plane",
    "ClassifyError", "EquivDecision", "GBeta", "brute_force_iso",
    "count_classes", "equiv_c", "equiv_r", "iso_witness",
    "necessity_check",
]
