"""
Boolean convolution of atomic measures
======================================

Boolean convolution adds ``F(z) - z`` where ``F = 1/G`` is the reciprocal
Cauchy transform.  For atomic measures ``F`` is a rational function, so the
convolution is a polynomial computation followed by a root solve.
"""

from fractions import Fraction

import numpy as np

from boolclt import AtomicMeasure, boolean_convolve, boolean_power, clt_normalize, rational_F

# %%
# The symmetric Bernoulli law has ``F(z) = z - 1/z``.
b = AtomicMeasure.bernoulli()
F = rational_F(b)
print("F_b numerator coefficients:", [str(c) for c in F.num.coef])
print("F_b denominator coefficients:", [str(c) for c in F.den.coef])

# %%
# Convolving it with itself gives ``z - 2/z``: atoms at +-sqrt(2).
bb = boolean_convolve(b, b)
print("b ⊎ b:", list(zip(bb.t.tolist(), bb.w.tolist())))

# %%
# The point mass at zero is the identity.
mu = AtomicMeasure.from_atoms([(Fraction(-1, 2), Fraction(4, 5)), (2, Fraction(1, 5))])
same = boolean_convolve(mu, AtomicMeasure.point_mass(0))
print("mu ⊎ delta_0:", list(zip(same.t.tolist(), same.w.tolist())))

# %%
# Powers keep the number of atoms.  Rescaled by sqrt(n) they approach the
# Bernoulli law.
for n in (1, 4, 64, 4096):
    p = boolean_power(mu, n)
    m = clt_normalize(mu, n)
    print(f"n={n:5d}  atoms of mu^n: {np.round(p.t, 4)}  normalized: {np.round(m.t, 4)}  weights: {np.round(m.w, 4)}")
