"""
A Pieri rule and the vertex operator Gamma
==========================================

The Jack side and the geometric side compute the same numbers.
"""

from extverts.geometry import euler_class, ext_character
from extverts.symfunc import pieri_lhs, pieri_rhs
from extverts.verify import bridge_value
from extverts.vertex import w_matrix_element

lam, mu = (1,), (2,)

lhs = pieri_lhs(lam, mu)   # <E^m (E*)^(theta-m-1) J_lam, J_mu>
rhs = pieri_rhs(lam, mu)   # product over boxes
print("pieri lhs == rhs:", lhs == rhs)
print("  value:", rhs)

# the same value from a mass-twisted Euler class at t1 = 1, t2 = -theta
print("from the Euler class:", bridge_value(lam, mu) == rhs)

# Gamma between fixed-point classes lands in a single power of z
w = w_matrix_element(lam, mu)
print("z-support:", w.support())
print("<Gamma f_1, f_2> =", w.at(1))
print("Euler class     =", euler_class(ext_character(lam, mu)).value())
