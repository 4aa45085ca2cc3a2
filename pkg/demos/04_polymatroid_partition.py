"""Flats, the dual picture, and how dual points sort themselves by flats."""
from collections import Counter

from minkmat import SubspaceTuple, dual_partition, dual_realization, flats, forbidden_sublattice, gf
from minkmat.polymatroid import distributive_decomposition

F3 = gf(3)

# %% A line inside a plane in GF(3)^3, plus one more line.
t = SubspaceTuple.from_generators(F3, 3, [
    [(1, 0, 0)],
    [(1, 0, 0), (0, 1, 0)],
    [(0, 1, 1)],
])
lat = flats(t)
print("flats:", lat.flats)
print("forbidden sublattice:", forbidden_sublattice(lat))
dual_realization(t)  # raises if the orthogonal ranks disagree
print("dual ranks agree")

# %% Each dual point is killed by exactly the subspaces in one flat.
part = dual_partition(t)
for f, size in part.sizes().items():
    print(f"  flat {str(f):10} {size:3} points")
print("total", sum(part.sizes().values()), "=", 3 ** 3)

# %% Distributive flats usually mean a coordinate basis exists.
dec = distributive_decomposition(t)
print("coordinate basis:", None if dec is None else dec.basis)

# %% But not always: three planes in general position in GF(2)^5.
planes = SubspaceTuple.from_generators(gf(2), 5, [
    [(1, 0, 0, 0, 0), (0, 0, 0, 1, 1)],
    [(1, 0, 1, 1, 0), (0, 1, 0, 1, 1)],
    [(0, 0, 1, 1, 0), (0, 0, 0, 0, 1)],
])
print("flat lattice size", len(flats(planes)), "distributive", flats(planes).is_distributive())
print("decomposition:", distributive_decomposition(planes))
