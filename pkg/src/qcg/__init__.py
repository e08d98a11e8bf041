"""q-Clebsch-Gordan rules and spinon characters for the affine algebra C2^(1)."""

from .algebra import (
    L1,
    L2,
    ZERO,
    LaurentPoly,
    Weight,
    label,
    pairing,
    q_pochhammer,
    series_inverse_pochhammer,
    weyl_dim,
)

__version__ = "0.1.0"
