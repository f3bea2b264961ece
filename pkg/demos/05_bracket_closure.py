# # The bracket closure
#
# Among T0 spaces, a map is epic when its image is dense for the bracket
# closure: a point belongs to [M] when every two opens agreeing on M also
# agree there.

from ltopology.frames import two_chain
from ltopology.spaces import discrete_space, inclusion, indiscrete_space
from ltopology.verify import bracket_closure, is_epimorphism, is_extremal_mono

L = two_chain()
D = discrete_space(L, "ab")
I = indiscrete_space(L, "ab")
print("[a] in the discrete space:", sorted(bracket_closure(D, [0])))
print("[a] in the indiscrete space:", sorted(bracket_closure(I, [0])))

f = inclusion(D, [0])
verdict = is_epimorphism(f, "LTop0")
print("inclusion of a is epic:", bool(verdict), verdict.witness)
print("inclusion of a is an extremal mono:", bool(is_extremal_mono(f, "LTop0")))
