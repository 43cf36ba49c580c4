"""
Jack polynomials in the power-sum basis
=======================================

Gram-Schmidt on monomial symmetric functions, ordered by dominance.
"""

from extverts.algebra import ratfun
from extverts.partitions import enumerate_partitions
from extverts.symfunc import format_symfunc, jack, jack_inner, schur_jacobi_trudi, hook_product

# every J_lam of degree 3, normalized so that p_1^3 has coefficient 1
for lam in enumerate_partitions(3):
    print(lam, "->", format_symfunc(jack(lam)))

# distinct Jacks are orthogonal for <p_lam, p_lam> = z_lam theta^(-l(lam))
print("<J_21, J_3> =", jack_inner(jack((2, 1)), jack((3,))))
print("<J_3, J_3>  =", jack_inner(jack((3,)), jack((3,))))

# theta = 1 gives Schur functions, up to the hook product
j = jack((2, 1)).subs({"theta": 1})
print("theta=1:", format_symfunc(j))
print("hooks * s_21:", format_symfunc(schur_jacobi_trudi((2, 1)).scale(ratfun(hook_product((2, 1))))))
