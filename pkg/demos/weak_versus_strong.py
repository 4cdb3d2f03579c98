"""Two q-matroids on F_2^4 whose bases nest, yet the identity between them is not a strong map.

Run: python3 demos/weak_versus_strong.py
"""
from qmatroids import corpus as cp
from qmatroids import qdelta as qd
from qmatroids.qg import QGPair, weak_qg_family
from qmatroids.strongmap import CRITERIA, basis_sandwich

M1, M2 = cp.sandwich_pair()
lat = M1.lattice

print("M1:", len(M1.families.bases), "bases of dimension", M1.full_rank)
print("M2:", len(M2.families.bases), "bases of dimension", M2.full_rank)
print("basis sandwich:", basis_sandwich(M1, M2).describe())
for name, check in CRITERIA.items():
    print(f"{name:>9}:", check(M1, M2).describe())

# the sandwich family exists anyway, but is not a q-Delta-matroid
fam = weak_qg_family(QGPair.weak(M1, M2))
print(f"\nweak q-g family: {len(fam)} spaces")
print(qd.check_f1f2(lat, fam.feasible).describe())
