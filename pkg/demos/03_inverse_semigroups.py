"""Inverse semigroups: the Brandt semigroup B5 and Munn semigroups.

B5 is the Munn semigroup of the semilattice {g0, g1, 0}.  Every automorphism
of PA(B5) comes from an automorphism or anti-automorphism of B5 itself.
"""
from pamona import construct as C
from pamona import core, props
from pamona.formats import emit_dot
from pamona.isotest import induced_by_iso_or_antiiso, is_isomorphic, pa_automorphisms

B5 = C.brandt5()
E = C.antichain_with_zero(2)
T = C.munn(E).semigroup
print("Munn semigroup of {g0, g1, 0} is B5:", is_isomorphic(T, B5))
print("fundamental:", props.is_fundamental(B5))

g = core.green(B5)
print("D-classes:", [sorted(B5.label(x) for x in d) for d in g.d_classes])
print("isolated idempotents:", [B5.label(e) for e in props.isolated_idempotents(B5)])

z, b = B5.index_of("0"), B5.index_of("b")
print("short bypass from 0 to bb':", [B5.label(x) for x in props.short_bypass(B5, z, b).chain])

for phi in pa_automorphisms(B5):
    kinds = sorted({i.kind for i in induced_by_iso_or_antiiso(phi)})
    print("automorphism of PA(B5) induced by:", ", ".join(kinds))

print()
print(emit_dot(B5), end="")
