# # The Sierpinski L-space
#
# Over a frame L, the Sierpinski space has L itself as carrier and is
# generated by the identity L-set.  Its opens classify the opens of every
# other space: an L-set is open exactly when it is continuous into it.

import itertools

from ltopology.fixtures import xyz_space
from ltopology.frames import three_chain
from ltopology.spaces import StructuredMap, map_predicate, sierpinski_space

L = three_chain()
S = sierpinski_space(L)
print(S)
for mu in S.opens:
    print("  open:", S.lset_labels(mu))

X = xyz_space(L)
print("\nevery L-set on", X.points)
for mu in itertools.product(range(L.size), repeat=X.n_points):
    cont = bool(map_predicate(StructuredMap(X, S, mu), "continuous"))
    if cont or X.is_open(mu):
        print(" ", X.lset_labels(mu), "open" if X.is_open(mu) else "-", "continuous" if cont else "-")

# Only the three opens show up, and each is marked both ways.
