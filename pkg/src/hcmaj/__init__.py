"""Exact Hadamard circulant majorization: deciders, linear preservers and
the generalized inverses that inherit the preserver property."""

from .circulant import (CirculantCombination, as_circulant_combo, circulant_perm,
                        combo_to_matrix, diag_index, is_doubly_stochastic)
from .exact import (Mat, full_rank_factorization, hadamard, identity, mat_add, mat_mul,
                    mat_scale, rank, solve, trace_inner, unit, zeros)
from .geninv import (IndexTooLarge, NotInvertible, drazin, group_inverse, index_of,
                     inverse, moore_penrose)
from .majorization import decide_h, decide_hc, verify_h_witness, verify_hc_witness
from .operators import (OperatorRep, adjoint, apply, basis_image, compose,
                        from_basis_images, from_function, kernel_basis, member,
                        perp_basis, range_basis)
from .preserver import (PreserverCertificate, Refutation, decide_hc_preserver,
                        diagonal_profile, hm_necessary_check, random_preserver,
                        theorem4_oracle, verify_invariance_lemma)

__version__ = "0.1.0"
