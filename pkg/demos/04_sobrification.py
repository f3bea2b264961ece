# # Points and sobrification
#
# A point of a space's opens is a frame map into L.  The single-point space
# whose opens are all of the 3-chain has three such points but only one real
# point, so it is T0 without being sober.

from ltopology.frames import three_chain
from ltopology.sober import eta, firm_factorization, is_sober, point_space, sobrify
from ltopology.spaces import discrete_space, find_homeomorphism, is_t0, sierpinski_space

L = three_chain()
P = discrete_space(L, ["a"])
print("T0:", bool(is_t0(P)), " sober:", bool(is_sober(P)))

ps = point_space(P)
for label, table in ps.tables_by_label().items():
    print(" ", label, table)

R, e = sobrify(P)
print("eta:", e.as_labels())
print("sobrification is L_S:", find_homeomorphism(R, sierpinski_space(L)) is not None)

# The unit is an epimorphic embedding into a sober space, so it factors
# through the sobrification by an isomorphism (here the identity).

fstar, g = firm_factorization(e, ps)
print("f* =", fstar.mapping, " g =", g.mapping)
