"""Run the randomized checks, then break the rank function on purpose."""
from minkmat import gf
from minkmat.field import RATIONALS
from minkmat.matroid import rank_mutation
from minkmat.suite import GenConfig, replay, run_suite

# %% A few hundred random tuples over two fields.
for field in (gf(2), RATIONALS):
    report = run_suite(GenConfig(field=field, ambient_dim=4, n=5, seed=11, cases=200))
    print(report.render())
    print()

# %% With rank off by one, checks fail and hand back a replayable tuple.
with rank_mutation():
    bad = run_suite(GenConfig(seed=11, cases=20), ["rank_function", "basis_defect"])
stats = bad.checks["rank_function"]
print("failures:", bad.failures)
print(stats.counterexample)
print("replay on a healthy build (None = passes):", replay("rank_function", stats.counterexample))
