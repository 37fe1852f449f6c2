# %% [markdown]
# # Cohomology from a 6x6 integer matrix
#
# H^6 is Z^6 modulo the rows of a relation matrix built from s1, s2, s3.
# Its determinant is +-r; the Smith normal form gives the group structure.

# %%
from biquotient13.cohomology import cohomology_summary, det_exact, relation_matrix, smith_normal_form

for t in [(1, 1, 1, 1, 1), (1, 2, 2, 2, 2), (2, 3, 4, 4, 4)]:
    rel = relation_matrix(t)
    _, d, _ = smith_normal_form(rel)
    print(t, "det", det_exact(rel), "diagonal", [d[i][i] for i in range(6)])
    print("   ", cohomology_summary(t).h6)

# %%
summary = cohomology_summary((1, 2, 2, 2, 2))
for i in range(14):
    print(f"H^{i:<2} = {summary.group(i)}")
