"""Zero-defect subtuples, their poset, and a basis that makes them coordinate."""
from minkmat import RATIONALS, Poset, SubspaceTuple, bk_decomposition, bk_sublattice, coordinate_basis
from minkmat.bk import apply_basis_change, maximal_bk_filtration, realize_poset

# %% A line, a plane beside it, and the whole space.
t = SubspaceTuple.from_generators(RATIONALS, 3, [
    [(1, 0, 0)],
    [(0, 1, 0), (0, 0, 1)],
    [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
])
print("BK-subtuples:", bk_sublattice(t).family)
dec = bk_decomposition(t)
for label in dec.poset.labels:
    g = dec.graded[label]
    print(f"  element {label}: block {dec.blocks[label]}, graded dims {g.dims} in dim {g.ambient_dim}")
print("filtration:", maximal_bk_filtration(t, decomposition=dec).chain)

# %% Any finite poset shows up this way.
V = Poset.from_relations("abc", [("a", "b"), ("a", "c")])
r = realize_poset(V, RATIONALS)
print("realization of the V poset:", list(r.entries))
print("round trip isomorphic:", bk_decomposition(r).poset.is_isomorphic(V))

# %% A skewed flag is made coordinate by a change of basis.
flag = SubspaceTuple.from_generators(RATIONALS, 2, [[(1, 1)], [(1, 0), (0, 1)]])
M = coordinate_basis(flag)
print("matrix:", [" ".join(map(str, row)) for row in M])
print("entries afterwards:", list(apply_basis_change(flag, M).entries))
