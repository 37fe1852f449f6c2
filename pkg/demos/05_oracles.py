# %% [markdown]
# # Checking the two linear-algebra facts behind positivity
#
# 1. A linear functional on an adjoint orbit is extremal at diagonal points,
#    so its range is spanned by the 120 permuted values.
# 2. Diagonal traceless H orthogonal to a conjugate of sp(2) has one of two
#    root patterns.

# %%
import numpy as np

from biquotient13.liealg import diag_i, haar_special_unitary
from biquotient13.oracles import (
    classify_root_pattern, lemma8_complement, orbit_extrema, structured_su4_elements,
)

rng = np.random.default_rng(0)
h, a = diag_i(rng.standard_normal(5)), diag_i(rng.standard_normal(5))
rep = orbit_extrema(h, a)
print(f"permutation range [{rep.permutation_min:.6f}, {rep.permutation_max:.6f}]")
print(f"ascent found      [{rep.numeric_min:.6f}, {rep.numeric_max:.6f}]  gap {rep.gap:.1e}")

# %%
line = lemma8_complement(np.eye(4))
print("identity:", np.round(np.imag(np.diag(line[0])), 4), classify_root_pattern(line[0]))
print("random conjugates with a solution:",
      sum(bool(lemma8_complement(haar_special_unitary(rng, 4))) for _ in range(200)), "/ 200")
patterns = {}
for h1 in structured_su4_elements(rng, 300):
    for sol in lemma8_complement(h1):
        name = classify_root_pattern(sol)
        patterns[name] = patterns.get(name, 0) + 1
print("structured conjugates:", patterns)
