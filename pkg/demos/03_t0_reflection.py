# # T0 reflection
#
# Points that no open separates are glued together.  Every continuous map into
# a T0 space then factors through the quotient in exactly one way.

from ltopology.fixtures import xyz_space
from ltopology.frames import three_chain
from ltopology.spaces import is_t0, map_predicate, t0_reflection
from ltopology.verify import fixture_family, verify_t0_reflection

X = xyz_space(three_chain())
print("T0?", bool(is_t0(X)), is_t0(X).witness)

R, q = t0_reflection(X)
print("classes:", R.points)
print("quotient map:", q.as_labels(), "is a quotient:", bool(map_predicate(q, "quotient")))

# The universal property, checked over the stock spaces on the 3-chain.

report = verify_t0_reflection(fixture_family("F3"))
print("\n".join(report.lines()))
