"""
Rate of the Boolean central limit theorem
=========================================

For a standardized atomic law ``mu`` the normalized Boolean powers
``mu_n`` approach the symmetric Bernoulli law.  With a nonzero third moment
the Lévy distance decays like ``1/sqrt(n)``.  A symmetric law decays faster.
"""

import sys

from boolclt import AtomicMeasure, powers_of_two, rate_fit, theorem1_experiment, two_atom
from boolclt.report import report_csv, report_svg

mu = two_atom(0.8)
rep = theorem1_experiment(mu, powers_of_two(16, 2**20))
print(rep.summary())
sys.stdout.write(report_csv(rep))

# %%
# sqrt(n) * d_lev settles near a constant.
for r in rep.rows[-5:]:
    print(f"n={r.n:8d}  sqrt(n) d_lev = {r.sqrt_n_dlev:.5f}  bound/d_lev = {r.thm1_bound / r.d_lev:.1f}")

# %%
# A symmetric law: no third-moment term, so the slope is close to -1.
sym = AtomicMeasure.from_atoms([(-(2**0.5), 0.25), (0, 0.5), (2**0.5, 0.25)])
rep_sym = theorem1_experiment(sym, powers_of_two(16, 2**16))
print("symmetric law slope over all rows:", rate_fit(rep_sym))

# %%
# Write the log-log chart next to this script.
with open("berry_esseen_rate.svg", "w") as fh:
    fh.write(report_svg(rep))
