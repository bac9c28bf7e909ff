"""Two different semigroups can have the same monoid of partial automorphisms.

The cyclic group C2 and the null semigroup N2 look nothing alike, but each
has exactly three partial automorphisms: the empty map, the identity on the
single idempotent, and the identity.
"""
from pamona import construct as C
from pamona import pam
from pamona.isotest import is_isomorphic, pa_isomorphic


def show(name, S):
    M = pam.pa_monoid(S)
    print(f"PA({name}) has {len(M)} elements:")
    for a in M.elements:
        print("    {" + ", ".join(f"{S.label(x)}>{S.label(y)}" for x, y in a.pairs()) + "}")


c2, n2 = C.cyclic_group(2), C.null_semigroup(2)
show("C2", c2)
show("N2", n2)

print("C2 isomorphic to N2?", is_isomorphic(c2, n2))
v = pa_isomorphic(c2, n2)
print("PA(C2) isomorphic to PA(N2)?", bool(v))
print("the bijection it carries on elements:",
      ", ".join(f"{c2.label(x)} -> {n2.label(y)}" for x, y in v.phi.map.pairs()))

# Monogenic semigroups pair up in a few exceptional ways.
for (m1, r1), (m2, r2) in [((2, 2), (3, 1)), ((3, 6), (4, 3)), ((2, 2), (2, 3))]:
    S, T = C.monogenic_mn(m1, r1), C.monogenic_mn(m2, r2)
    print(f"M({m1},{r1}) vs M({m2},{r2}):", "same PA" if pa_isomorphic(S, T) else "different PA")
