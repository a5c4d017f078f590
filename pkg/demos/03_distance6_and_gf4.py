# Adding the coset of alpha to the zeros raises d to 6 while keeping locality 2.
#
# The repair groups {i, i+n/3, i+2n/3} are disjoint, each group sees only
# even-weight patterns, and mapping 011 -> 1, 101 -> w, 110 -> w^2 turns the
# code into an additive code over GF(4) at half the distance. At n = 15 that
# image is the perfect [5, 3, 3] Hamming code over GF(4).

from cyclrc import (
    contract_to_f4,
    disjoint_d6_dimension_bound,
    distance6,
    find_disjoint_groups,
    min_distance,
)
from cyclrc.bounds import f4_sphere_volume

for m in (4, 6, 8):
    code = distance6(m).code
    d = min_distance(code)
    print(f"m={m}: [{code.n}, {code.k}], d in [{d.lower}, {d.upper}] via {d.method};"
          f" dimension bound {disjoint_d6_dimension_bound(m)}")

code = distance6(4).code
groups = find_disjoint_groups(code, 2)
print("repair groups:", [g.coordinates for g in groups])
img = contract_to_f4(code, groups)
print(f"GF(4) image: length {img.length}, {img.size} words, distance {img.distance}")
print("sphere packing:", img.size, "*", f4_sphere_volume(5, 1), "=", img.size * f4_sphere_volume(5, 1), "= 4^5")
