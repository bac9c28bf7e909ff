"""A group can share its partial automorphism monoid with a non-group.

Inflating a group Q at its identity adds one element z with z*z = e.  When
G = C2 x P with |P| odd, PA(G) matches PA(Q^<1>) whenever PA(P) matches PA(Q).  Groups with
no such splitting, like C4, have no non-group partner of that shape.
"""
from pamona import construct as C
from pamona import pam, props
from pamona.isotest import pa_automorphisms, pa_isomorphic

for name, G in C.small_groups(8):
    d = props.c2_times_odd(G)
    if d is None:
        print(f"{name:6s} does not split as C2 x odd")
        continue
    P = G.subsemigroup(d.P)[0]
    Q = C.inflate_at_identity(P)
    print(f"{name:6s} = C2 x (order {P.order});  PA({name}) ~ PA(P^<1>):", bool(pa_isomorphic(G, Q)))

print("C4 vs C2^<1>:", bool(pa_isomorphic(C.cyclic_group(4), C.inflate_at_identity(C.cyclic_group(2)))))

# The isomorphism can be built directly from any PA-automorphism of P.
P = C.cyclic_group(5)
for psi in pa_automorphisms(P):
    phi, G, S = pam.lemma33_phi(psi, P, P)
    print(f"built PA(C2 x C5) -> PA(C5^<1>) on {len(phi.mapping)} elements; verified:", phi.verify())
