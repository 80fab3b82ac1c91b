from .angle import Angle, angle_compare, angle_scale
from .laurent import LaurentPoly, RatFnClass, poly_normalize
from .realalg import CertifiedInterval, RealAlg
from .smith import smith_normal_form

__all__ = [
    "Angle",
    "CertifiedInterval",
    "LaurentPoly",
    "RatFnClass",
    "RealAlg",
    "angle_compare",
    "angle_scale",
    "poly_normalize",
    "smith_normal_form",
]
