# %% [markdown]
# # Which five-tuples qualify, and how to tell the spaces apart
#
# Each tuple p = (p1, ..., p5) of positive integers gives a 13-dimensional
# quotient of U(5). The tuple qualifies when four conditions hold:
# a gcd condition a) that makes the action free, and three linear
# inequalities b)-d).

# %%
from biquotient13.tuples import (
    abresch_shift, check_admissibility, enumerate_admissible, invariant_collisions,
    symmetric_invariants,
)

for t in [(1, 1, 1, 1, 1), (1, 2, 2, 2, 2), (1, 1, 1, 2, 2), (1, 1, 1, 1, 2)]:
    rep = check_admissibility(t)
    inv = symmetric_invariants(t)
    failed = sorted({f.condition for f in rep.failures})
    print(f"{t}: admissible={rep.admissible!s:5}  sigma={inv.sigma}  r={inv.r}  failed={failed}")

# %% [markdown]
# r = |s1^3 - 4 s1 s2 + 8 s3| is the order of H^6 and H^8, so two tuples with
# different r give non-homeomorphic spaces. On the family (1, q^n, ..., q^n)
# it has the closed form 8 q^(2n) - 4 q^n + 1.

# %%
for q in (2, 3):
    for n in range(4):
        m = q ** n
        print(q, n, symmetric_invariants((1, m, m, m, m)).r, 8 * q ** (2 * n) - 4 * q ** n + 1)

# %% [markdown]
# Enumerating small tuples, and looking for r-collisions (pairs that r alone
# cannot separate):

# %%
tuples = enumerate_admissible(9)
print(len(tuples), "admissible tuples with entries <= 9")
print("sigma_1 always odd:", all(sum(t) % 2 for t in tuples))
print("collisions up to 12:", invariant_collisions(12))

# %% [markdown]
# Shifting every entry by a multiple of the lcm of the 15 split values keeps
# condition a) and eventually forces b)-d).

# %%
t = (1, 1, 1, 2, 4)
for n in range(1, 4):
    s = abresch_shift(t, n)
    print(n, s, check_admissibility(s).admissible)
