"""Nested Gabidulin codes over F_16 give a strong pair, and with it a q-g family.

Run: python3 demos/nested_codes.py
"""
from qmatroids import qdelta as qd
from qmatroids.qg import qg_family
from qmatroids.rmcodes import ExtFieldTower, code_qmatroid, gabidulin, nested_pair, oracle_rank, subcode

tw = ExtFieldTower.of(2, 4)
C1 = gabidulin(tw, 2, 4)
C2 = subcode(C1, [0])
M1 = code_qmatroid(C1)
lat = M1.lattice
print("C1 generator:", C1.G.entries)
print("ranks by dimension:", {d: sorted({M1.r(i) for i in ids}) for d, ids in enumerate(lat.by_dim)})
assert all(oracle_rank(C1, lat[i]) == M1.r(i) for i in range(lat.size))

pair = nested_pair(C1, C2)
print("certificate:", pair.certificate, "-", pair.report.describe())
fam = qg_family(pair)
print(f"q-g family: {len(fam)} spaces")
print("(F3)(F4):", qd.check_f3f4(lat, fam.feasible).describe())
print("saturated:", qd.is_saturated(fam).describe())
