"""
Ext characters at pairs of fixed points
=======================================
"""

from extverts.geometry import (
    euler_class, ext_character_hooks, ext_character_ratfun, serre_dual, tangent_weights,
)

lam, mu = (2, 1), (1,)

# the character from ideal characters, pulled out of a rational function
print("from [I_lam], [I_mu]:", ext_character_ratfun(lam, mu))
# the same thing read off arms and legs
print("from hooks:          ", ext_character_hooks(lam, mu))

# dimension is |lam| + |mu|
print("mass:", ext_character_hooks(lam, mu).mass())

# Serre duality swaps the pair and dualizes, twisted by z1 z2
print("serre ok:", ext_character_hooks(lam, mu) == serre_dual(ext_character_hooks(mu, lam)))

# lam = mu gives the tangent space; m + weight for each term with the mass on
print("tangent weights at (2,1):", tangent_weights(lam).value())
print("mass-twisted:", euler_class(ext_character_hooks(lam, lam)).value())
