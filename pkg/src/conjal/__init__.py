"""Exact finite-dimensional algebras with conjugation.

Algebras are given by integer or rational structure constants over Z, Q or
Z/n.  On top of the element arithmetic sit fractions, noncommutative
polynomials in one variable, rational mappings and ideal membership.
"""

from .algebra import (
    CATALOG_NAMES, AlgebraSpec, Element, catalog, conj, dumps_spec, im_part, load_spec,
    loads_spec, mul, norm_form, re_part, validate_algebra,
)
from .errors import ConjalError, DegenerateGenerator
from .fractions import (
    Classification, classify, fraction_equiv_scale, invert, left_fraction, lift_algebra,
    lift_element, right_fraction,
)
from .ideal import (
    AlgebraAmbient, IdealSpec, PolyAmbient, RationalAmbient, ideal_axiom_check, ideal_member,
    poly_ideal_membership, principal_membership, zeros_inclusion_check,
)
from .polynomial import (
    Leaf, MixedPolynomial, Monomial, Polynomial, Prod, Var, conj_as_polynomial, flatten,
    from_tensor, mono_norm_poly, poly_conj, poly_eval, root_test, substitute_conj, tensor_eq,
    tensor_eval, to_tensor,
)
from .rational import inv_poly, reval
from .scalar import QQ, ZZ, ModN, Scalar, ScalarRing

from types import ModuleType as _Module

__all__ = [n for n, v in list(globals().items()) if not n.startswith("_") and not isinstance(v, _Module)]
