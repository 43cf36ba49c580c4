"""
Instanton partition function three ways
=======================================
"""

from extverts.algebra import substitute
from extverts.geometry import nekrasov_product, nekrasov_sum
from extverts.vertex import gamma_trace

order = 4
fixed = nekrasov_sum(order)       # sum over fixed points
prod = nekrasov_product(order)    # prod (1 - q^n)^(-m(m + t1 + t2)/(t1 t2) - 1)
trace = gamma_trace(order)        # trace of Gamma on Fock space, z^0 part

print("sum == product:", fixed == prod)
print("sum == trace:  ", fixed == trace)
print("q^1 coefficient:", fixed[1])

# no mass: counts partitions
print([substitute(c, {"m": 0}) for c in nekrasov_product(8).coeffs])
