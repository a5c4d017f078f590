# The [63, 27, 4] code: every coordinate has three repair sets that meet only there.
#
# The coordinates fall into nine classes mod 9; inside each class the weight-3
# parity checks are the seven lines of the Fano plane. A busy disk only blocks
# the repair sets that use it.

import numpy as np

from cyclrc import (
    available,
    choose_repair_set,
    erasure_decode,
    local_repair,
    verify_availability,
)

code = available(6).code
print(code, "h =", code.h)
cert = verify_availability(code, r=2, t=3)
print("coordinate 0 repair sets:", [c.support for c in cert.per_coordinate[0]])

rng = np.random.default_rng(0)
word = code.encode(int(rng.integers(0, 1 << 27)))

# repair coordinate 0 while coordinate 9 is busy serving reads
check = choose_repair_set(cert, 0, busy={9})
trace = local_repair(word, 0, check)
print("repair of 0 reads", trace.reads, "value", trace.value, "correct:", trace.value == word & 1)

# any three erasures are within d - 1 and decode globally
erased = [0, 9, 45]
damaged = word & ~sum(1 << j for j in erased)
print("global decode of", erased, "ok:", erasure_decode(code, damaged, erased) == word)
