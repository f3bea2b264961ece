# # Finite frames
#
# A finite frame is a distributive lattice with a bottom and a top.  We build
# a few, break one on purpose, and count the maps between them.

from ltopology.errors import FrameError
from ltopology.frames import (
    PENTAGON_LABELS,
    diamond,
    enumerate_frame_maps,
    generate_subframe,
    pentagon_order,
    power_frame,
    three_chain,
    two_chain,
    validate_frame,
)

D4 = diamond()
print(D4)
a, b = D4.index("a"), D4.index("b")
print("a meet b =", D4.label(D4.meet(a, b)), "  a join b =", D4.label(D4.join(a, b)))

# The pentagon is a lattice but not a distributive one.  The checker names the
# first failing triple.

try:
    validate_frame(list(PENTAGON_LABELS), pentagon_order())
except FrameError as exc:
    print("rejected:", exc)

# Frame maps preserve 0, 1 and the binary operations.  The diamond has exactly
# two maps onto the two-chain, one per prime filter.

for f in enumerate_frame_maps(D4, two_chain()):
    print({D4.label(i): two_chain().label(v) for i, v in enumerate(f.table)})

print(len(enumerate_frame_maps(three_chain(), three_chain())), "endomaps of the 3-chain")

# Subframes generated by a set of elements: joins of finite meets.

P = power_frame(two_chain(), 2)
one_x = P.index(("1", "0"))
print(generate_subframe(P, [one_x]).labels())
