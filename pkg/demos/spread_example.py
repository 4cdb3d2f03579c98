"""{0, E} plus a spread of F_2^4, and what happens when it is cut down to a 3-space.

Run: python3 demos/spread_example.py
"""
from qmatroids import qdelta as qd
from qmatroids.cases import _restriction_candidates

sp = qd.spread(2)
lat = sp.lattice
print("feasible spaces:")
for s in sp.subspaces():
    print("  ", s.render())

print("\n(F1)(F2):", qd.check_f1f2(lat, sp.feasible).describe())
print("(F3)(F4):", qd.check_f3f4(lat, sp.feasible).describe())
up, lo = qd.upper_lower(sp)
print("upper rank", up.full_rank, "lower rank", lo.full_rank)
print("rank_delta of each point:", sorted({int(qd.rank_delta(sp, z)) for z in lat.points}))

T = lat.unit_id(1, 2, 3)
lt, inside, cut = _restriction_candidates(T)
for label, fam in (("spaces inside T", inside), ("intersections with T", cut)):
    print(f"\n{label} ({len(fam)} spaces, in T's coordinates):")
    print("  ", " | ".join(lt[i].render() for i in sorted(fam)))
    print("  ", qd.check_f1f2(lt, fam).describe())
