# Zeros at multiples of 3 plus the cosets of alpha and alpha^-1 give d = 10.
#
# The BCH bound sees the run ..., n-2, n-1, 0, 1, 2, 3, 4 of nine consecutive
# zeros; the seeded search then looks for a weight-10 codeword to close the gap.

from cyclrc import bch_bound, disjoint_d10_dimension_bound, distance10, min_distance

for m in (4, 6, 8):
    code = distance10(m).code
    d = min_distance(code, seed=1)
    print(f"m={m}: [{code.n}, {code.k}]  BCH {bch_bound(code)}  d in [{d.lower}, {d.upper}]"
          f" ({d.method}, exact={d.exact})  even-k bound {disjoint_d10_dimension_bound(m)}"
          f"  general bound {disjoint_d10_dimension_bound(m, even_k=False)}")
