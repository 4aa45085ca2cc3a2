"""Quotients, the maximal essential subtuple, and contraction."""
from minkmat import RATIONALS, MinkowskiMatroid, SubspaceTuple, classify, quotient_tuple

# %% Replace the plane with all of 3-space: now bases have defect 1.
t = SubspaceTuple.from_generators(RATIONALS, 3, [
    [(1, 0, 0)],
    [(1, 0, 0)],
    [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
])
m = MinkowskiMatroid(t)
print("basis defect:", m.basis_defect())
for b in m.bases():
    print(f"  basis {b}: largest zero-defect part {m.max_bk_in_basis(b)}")

# %% The dependent part can be quotiented away.
ess = m.maximal_essential_subtuple()
print("maximal essential subtuple:", ess, classify(t, ess))
q = quotient_tuple(t, ess)
print("quotient dims", q.dims, "in dimension", q.ambient_dim,
      "independent:", MinkowskiMatroid(q).is_independent(range(len(q))))

# %% Quotienting by a zero-defect subtuple is the same as contracting it.
k = (0,)
c = m.contract(k)
qm = MinkowskiMatroid(quotient_tuple(t, k))
for s, qs in [((1,), (0,)), ((2,), (1,)), ((1, 2), (0, 1))]:
    print(f"{s}: contraction {c.is_independent(s)}, quotient {qm.is_independent(qs)}")
