"""Exact sl3 colored invariants of T(2,b) torus knots.

The package computes the colored invariant from a closed-form expansion
of the second plethysm of an irreducible sl3 character, with exact
Laurent arithmetic on a fractional exponent lattice.  An independent
symmetric-function route (Adams operation plus Schur decomposition)
cross-checks both the plethysm expansion and the invariant itself.
"""

__version__ = "0.1.0"

from .jones import (ColoredJonesResult, DegreeReport, TorusKnotSpec,
                    degree_report, jones_rosso, jones_t2b)
from .laurent import (InexactDivisionError, LaurentError,
                      NonIntegralExponentError, ScaledLaurent, ScaleError,
                      ScaleMismatchError, UndefinedDegreeError)
from .plethysm2 import psi2_closed, psi2_schur_form, signed_dimension
from .schur3 import (NotSymmetricError, adams, decompose_schur,
                     generic_row_at_m2_one, is_symmetric, mul_sym, psi_oracle,
                     schur, straighten, verify_lemma_LR,
                     verify_lemma_psi2_recurrence)
from .sl3rep import (ROOT_DATA, RootDataSl3, SignedWeightSum, Weight,
                     dimension, pairing, qdim_closed, qdim_weyl, qint,
                     twist_monomial, twist_weyl_check)

__all__ = [
    "__version__",
    # laurent
    "ScaledLaurent",
    "LaurentError",
    "ScaleMismatchError",
    "ScaleError",
    "InexactDivisionError",
    "NonIntegralExponentError",
    "UndefinedDegreeError",
    # sl3rep
    "Weight",
    "RootDataSl3",
    "ROOT_DATA",
    "pairing",
    "qint",
    "dimension",
    "qdim_closed",
    "qdim_weyl",
    "twist_monomial",
    "twist_weyl_check",
    "SignedWeightSum",
    # schur3
    "NotSymmetricError",
    "mul_sym",
    "adams",
    "is_symmetric",
    "straighten",
    "schur",
    "decompose_schur",
    "psi_oracle",
    "verify_lemma_LR",
    "verify_lemma_psi2_recurrence",
    "generic_row_at_m2_one",
    # plethysm2
    "psi2_closed",
    "psi2_schur_form",
    "signed_dimension",
    # jones
    "TorusKnotSpec",
    "ColoredJonesResult",
    "DegreeReport",
    "jones_t2b",
    "jones_rosso",
    "degree_report",
]
