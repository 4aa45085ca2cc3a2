"""Independence, rank, bases and circuits of a small subspace tuple.

Run: python3 demos/01_minkowski_matroid.py
"""
from minkmat import RATIONALS, MinkowskiMatroid, SubspaceTuple, defect

# %% Two copies of a line, plus the plane that contains them.
t = SubspaceTuple.from_generators(RATIONALS, 2, [
    [(1, 0)],
    [(1, 0)],
    [(1, 0), (0, 1)],
])
m = MinkowskiMatroid(t)
print("dims           ", t.dims)
print("defect of all  ", defect(t, (0, 1, 2)))



def show(w):
    return None if w is None else {i: " ".join(map(str, v)) for i, v in w.items()}


# %% A set is independent when no subset spans fewer dimensions than it has members.
for s in [(0,), (0, 1), (0, 2), (0, 1, 2)]:
    print(f"{str(s):10} independent={m.is_independent(s)!s:5}  witness={show(m.witness(s))}")

# %% Structure.
print("rank           ", m.rank())
print("bases          ", m.bases())
print("circuits       ", m.circuits())
print("coloops        ", m.coloops())
print("basis defect   ", m.basis_defect())
for c in m.circuits():
    print(f"circuit {c} has defect {defect(t, c)}")
