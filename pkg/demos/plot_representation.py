"""
The two-level continued fraction of a standardized law
======================================================

A law with mean 0 and variance 1 has

    F(z) = z - 1 / (z - alpha - G_omega(z))

with ``alpha`` its third moment and ``omega`` a finite non-negative measure
of mass ``m4 - m3**2 - 1``.  For atomic laws both divisions are exact.
"""

from fractions import Fraction

import numpy as np

from boolclt import AtomicMeasure, eval_F, extract_representation, moment, two_atom
from boolclt.transform import reconstruct_F

laws = {
    "bernoulli": AtomicMeasure.bernoulli(),
    "two-atom p=4/5": two_atom(Fraction(4, 5)),
    "three-atom": AtomicMeasure.from_atoms(
        [(-2, Fraction(1, 8)), (0, Fraction(3, 4)), (2, Fraction(1, 8))]
    ),
}

for name, mu in laws.items():
    r = extract_representation(mu)
    print(f"{name}: alpha = {r.alpha}, K = {r.K}")
    print(f"   m3 = {moment(mu, 3)}, m4 - m3^2 - 1 = {moment(mu, 4) - moment(mu, 3) ** 2 - 1}")
    print(f"   omega atoms: {list(zip(r.omega.locations, r.omega.weights))}")

# %%
# The identity holds pointwise in the upper half-plane.
mu = laws["three-atom"]
z = np.array([0.3 + 0.1j, -2 + 1j, 5j])
print(np.abs(reconstruct_F(extract_representation(mu), z) - eval_F(mu, z)))
