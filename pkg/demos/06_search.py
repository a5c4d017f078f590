# Sweep every defining set of length 15 and keep the 2-local ones.
#
# The three families show up as Pareto points of (k, d).

from cyclrc import make_field, search_defining_sets

results, complete = search_defining_sets(make_field(4), r=2, require_locality=True)
for s in results:
    mark = "*" if s.pareto else " "
    print(f"{mark} [{s.n}, {s.k}, {s.distance.lower}] t={s.availability_t} zeros={list(s.zeros)}")
