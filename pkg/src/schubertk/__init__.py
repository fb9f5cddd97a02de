"""Restrictions of Schubert structure-sheaf classes to torus fixed points in
the equivariant K-theory of Grassmannians and maximal isotropic Grassmannians,
with Hilbert series, Hilbert polynomials and multiplicities at fixed points.

Three backends compute every class and cross-check each other: excited Young
diagrams, set-valued tableaux, and 0-Hecke subsequence enumeration.
"""

from .weyl import (
    RootSystem,
    WeylElement,
    apply,
    identity,
    inverse,
    is_minimal_rep,
    length,
    mult,
    parse_window,
    reduced_word,
    simple_reflection,
    simple_roots,
)
from .hecke import (
    commutation_class,
    demazure_fold,
    hecke_subsequences,
    is_fully_commutative,
)
from .shapes import (
    bd_identify,
    bd_identify_inverse,
    contains,
    partition_of,
    perm_of,
    perm_of_strict,
    strict_partition_of,
    transpose,
)
from .diagrams import (
    BoxSet,
    enumerate_eyd,
    energies,
    excite,
    reading_word,
    reflection_tableau,
    subword_of,
)
from .tableaux import SetValuedTableau, enumerate_svt, f_inverse, f_map
from .ring import GradedSeries, LaurentPoly, dual, ev_xi, geometric_expand, specialize_zero
from .restriction import (
    HilbertData,
    KClass,
    check_backends,
    graded_character,
    hilbert_data,
    hilbert_polynomial_coeffs,
    hilbert_polynomial_value,
    pullback,
    pullback_b_via_d,
    r_values,
    tangent_weights,
    xi_vector,
)

__version__ = "0.1.0"
