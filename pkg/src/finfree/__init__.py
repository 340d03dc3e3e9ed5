"""finfree: finite free convolutions, hypergeometric polynomial families,
and the asymptotics of their zero distributions.

Quick tour:

    from fractions import Fraction as F
    from finfree import Polynomial, mult_conv, add_conv
    from finfree.hyper import HypergeometricSpec, hyper_poly
    from finfree.families import s_limit_hyper

    p = hyper_poly(HypergeometricSpec(n=8, a=(F(3),), b=(F(3, 2),)))
    q = Polynomial.linear_power(F(2), 8)
    mult_conv(p, q, 8) == p.dilate(2)          # True: dilation identity
    s_limit_hyper(A=(), B=(F(0),)).moments(4)  # Marchenko-Pastur: 1, 2, 5, 14
"""

from .conv import add_conv, mult_conv
from .poly import Polynomial

__all__ = ["Polynomial", "add_conv", "mult_conv"]
__version__ = "0.1.0"
