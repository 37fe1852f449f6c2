# %% [markdown]
# # Searching for flat planes
#
# At a point g the quotient's tangent space is the 13-dimensional horizontal
# complement of the action directions. We minimize the curvature lower bound
# over all 2-planes there, at many random points. A positive minimum is
# numerical evidence of positive curvature, not a proof.

# %%
import time

from biquotient13.biquotient import CertifyConfig, certify_positivity

cfg = CertifyConfig(num_points=8, restarts=20)
for t in [(1, 1, 1, 1, 1), (1, 2, 2, 2, 2), (1, 1, 1, 2, 2)]:
    start = time.perf_counter()
    cert = certify_positivity(t, cfg)
    print(f"{t}: min bound {cert.min_value:.3e} at point {cert.argmin['point_index']}, "
          f"{cert.n_converged}/{cfg.num_points * cfg.restarts} starts converged, "
          f"{time.perf_counter() - start:.1f}s")

# %% [markdown]
# For (1,1,1,1,1) the metric is homogeneous, so every point gives the same
# minimum (1/32). For (1,1,1,2,2), which violates condition b), the minimum
# varies from point to point; with the default 20 points a couple of them
# carry planes where the bound is zero to rounding.

# %%
cert = certify_positivity((1, 1, 1, 2, 2), CertifyConfig())
for i, m in enumerate(cert.per_point_minima):
    print(i, f"{m:.3e}")
