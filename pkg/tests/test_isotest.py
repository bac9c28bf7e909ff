from pamona import construct as C
from pamona import core, pam
from pamona.isotest import (anti_isomorphisms, automorphisms, induced_by_iso_or_antiiso,
                            iota_compose_check, is_isomorphic, isomorphisms, monoid_isomorphic,
                            pa_automorphisms, pa_isomorphic)

import oracles


def test_automorphism_counts_match_brute_force(order4_semigroups):
    for S in order4_semigroups:
        ws = automorphisms(S)
        assert len(ws) == oracles.automorphism_count(S.table)
        assert all(w.verify() for w in ws)


def test_census_members_pairwise_distinct(order4_semigroups):
    by_order = {}
    for S in order4_semigroups:
        by_order.setdefault(S.order, []).append(S)
    for group in by_order.values():
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                assert not is_isomorphic(group[i], group[j])


def test_examples():
    assert len(list(isomorphisms(C.cyclic_group(3), C.cyclic_group(3)))) == 2
    assert not is_isomorphic(C.cyclic_group(2), C.null_semigroup(2))
    assert is_isomorphic(C.direct_product(C.cyclic_group(2), C.cyclic_group(3)), C.cyclic_group(6))


def test_symmetric_and_inverse_witnesses():
    S = C.brandt5()
    T = S.relabel([3, 0, 4, 1, 2])
    w = next(isomorphisms(S, T))
    assert next(isomorphisms(T, S)) is not None
    assert w.inverse().verify()


def test_anti_isomorphisms():
    c = C.cyclic_group(4)
    assert sorted(w.mapping for w in anti_isomorphisms(c, c)) == sorted(w.mapping for w in isomorphisms(c, c))
    S = C.brandt5()
    iota = core.natural_involution(S)
    antis = list(anti_isomorphisms(S, S))
    assert iota.image in [w.mapping for w in antis]
    for w in antis:
        assert w.verify() and iota_compose_check(S, w)
    L, R = C.left_zero(2), C.right_zero(2)
    assert not is_isomorphic(L, R)
    assert next(anti_isomorphisms(L, R), None) is not None


def test_monoid_isomorphic_examples():
    pa = pam.pa_monoid
    assert next(monoid_isomorphic(pa(C.cyclic_group(2)), pa(C.null_semigroup(2))), None) is not None
    q2 = C.inflate_at_identity(C.cyclic_group(2))
    assert next(monoid_isomorphic(pa(C.cyclic_group(4)), pa(q2)), None) is None
    assert next(monoid_isomorphic(pa(C.monogenic_mn(2, 2)), pa(C.monogenic_mn(3, 1))), None) is not None


def test_pa_isomorphic_examples():
    assert pa_isomorphic(C.cyclic_group(6), C.inflate_at_identity(C.cyclic_group(3)))
    assert pa_isomorphic(C.monogenic_mn(3, 6), C.monogenic_mn(4, 3))
    v = pa_isomorphic(C.cyclic_group(3), C.cyclic_group(4))
    assert not v and v.reason


def test_self_pa_isomorphism_order_3(small_semigroups):
    for S in small_semigroups:
        v = pa_isomorphic(S, S)
        assert v
        ident = pam.identity_pa_iso(pam.pa_monoid(S))
        assert pam.star_map(ident).mapping == tuple(range(len(pam.pa_monoid(S).lattice)))


def test_induced_classification():
    S = C.cyclic_group(3)
    M = pam.pa_monoid(S)
    res = induced_by_iso_or_antiiso(pam.identity_pa_iso(M))
    # PA(C3) is commutative, so conjugating by the automorphism of C3 also fixes everything
    assert sorted(i.theta.image for i in res) == [(0, 1, 2), (0, 2, 1)]
    assert {i.kind for i in res} == {"iso+anti-iso"}
    A, B, theta = C.c2_and_n2_over(C.chain(2))
    phi = pam.induces(theta, pam.pa_monoid(A), pam.pa_monoid(B)).witness
    found = induced_by_iso_or_antiiso(phi)
    assert theta in [i.theta for i in found]
    assert all(i.kind == "neither" for i in found)


def test_b5_automorphisms_all_induced():
    S = C.brandt5()
    auts = list(pa_automorphisms(S))
    assert auts
    for phi in auts:
        kinds = {i.kind for i in induced_by_iso_or_antiiso(phi)}
        assert kinds & {"iso", "anti-iso", "iso+anti-iso"}


def test_monogenic_inverse_phi_extends_to_iso_or_anti():
    # B5 = [[b]]: (bb^-1) phi is one of (b phi)(b phi)^-1, (b phi)^-1 (b phi)
    S = C.brandt5()
    b = S.index_of("b")
    inv = core.inverse_map(S)
    t = S.table
    for phi in pa_automorphisms(S):
        pe = pam.phi_e(phi)
        found = induced_by_iso_or_antiiso(phi)
        theta = found[0].theta.image
        y = theta[b]
        assert pe.image[t[b][inv[b]]] in (t[y][inv[y]], t[inv[y]][y])
