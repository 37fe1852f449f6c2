# %% [markdown]
# # The metric on U(5) and its curvature bound
#
# u(5) splits as k + p with k = u(4) + u(1) (block diagonal) and p the
# off-diagonal 4x1 blocks. Shrinking k by a factor 1/2 gives the metric
# <X, Y> = 1/2 <X_k, Y_k>_0 + <X_p, Y_p>_0.

# %%
import numpy as np

from biquotient13.liealg import block_split, bracket, diag_i, inner0, random_lie_vector
from biquotient13.metric import curvature_lower_bound_G, lift, lifted_inner, metric_inner

rng = np.random.default_rng(1)
x, y = random_lie_vector(rng), random_lie_vector(rng)
xk, xp = block_split(x)
print("split reconstructs x:", np.array_equal(xk + xp, x))
print("<x, y> =", metric_inner(x, y))
print("lift is an isometry:", np.isclose(lifted_inner(lift(x), lift(y)), metric_inner(x, y)))

# %% [markdown]
# The lower bound is a quarter of the squared bracket of the horizontal
# lifts. It vanishes on planes spanned by x and a y in k commuting with both
# blocks of x, and is positive on a generic plane.

# %%
print("generic plane:", curvature_lower_bound_G(x, y))
d = np.array([0.3, -1.0, -1.0, 2.0, 2.0])
x_flat = np.where(np.equal.outer(d, d), x, 0)
print("flat plane:   ", curvature_lower_bound_G(x_flat, diag_i(d)))

# %% [markdown]
# Bracket relations of the symmetric pair: [k, p] lies in p and [p, p] in k.

# %%
k, p = random_lie_vector(rng, "k"), random_lie_vector(rng, "p")
print("|k-part of [k, p]| =", np.abs(block_split(bracket(k, p)).xk).max())
print("|p-part of [p, p]| =", np.abs(block_split(bracket(p, random_lie_vector(rng, "p"))).xp).max())
print("<k, p>_0 =", inner0(k, p))
