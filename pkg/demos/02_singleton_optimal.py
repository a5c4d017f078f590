# The d = 2 family: zeros at every multiple of r + 1.
#
# The dual code then contains the weight-(r+1) words spread evenly around the
# cycle, which is exactly what local repair needs, and the code meets the
# LRC Singleton bound with equality.

from cyclrc import (
    find_low_weight_duals,
    lrc_singleton_bound,
    min_distance,
    singleton_optimal,
)

res = singleton_optimal(4, r=2)
code = res.code
print(code, "g =", code.g, " h =", code.h)

for check in find_low_weight_duals(code, 3):
    row = "".join("1" if i in check.support else "0" for i in range(code.n))
    print("dual word", " ".join(row))

d = min_distance(code)
print("minimum distance", d.lower, "witness support", [i for i in range(code.n) if d.witness >> i & 1])
print("Singleton-type bound", lrc_singleton_bound(code.n, code.k, 2))

# larger r works the same way whenever r + 1 divides n
for m, r in [(6, 2), (6, 6), (8, 4)]:
    c = singleton_optimal(m, r).code
    print(f"m={m} r={r}: [{c.n}, {c.k}], bound {lrc_singleton_bound(c.n, c.k, r)}")
