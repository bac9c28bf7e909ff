import pytest

from pamona import construct as C
from pamona import core, props
from pamona.errors import NotAGroup, NotAMeetSemilattice, NotASemilattice, NotPartialHom
from pamona.isotest import is_isomorphic

import oracles


def test_orders():
    assert C.monogenic_mn(2, 2).order == 3
    assert C.cyclic_group(6).order == 6
    assert C.null_semigroup(3).order == 3
    for m in range(1, 5):
        for n in range(1, 5):
            S = C.monogenic_mn(m, n)
            p = core.element_profile(S, 0)
            assert (p.order, p.index, p.period) == (m + n - 1, m, n)


def test_inflation():
    q = C.inflate_at_identity(C.cyclic_group(3))
    assert q.order == 4
    assert core.is_idempotent_commutative(q)
    assert not core.is_regular(q)
    for n in range(1, 6):
        S = C.inflate_at_identity(C.cyclic_group(n))
        assert core.regular_elements(S) == set(range(n))
    with pytest.raises(NotAGroup):
        C.inflate_at_identity(C.null_semigroup(2))


def test_direct_product_and_zero():
    p = C.direct_product(C.cyclic_group(2), C.cyclic_group(3))
    assert is_isomorphic(p, C.cyclic_group(6))
    z = C.adjoin_zero(C.cyclic_group(2))
    assert z.order == 3 and len(core.idempotents(z)) == 2


def test_small_groups_are_distinct_groups():
    gs = C.small_groups(8)
    assert len(gs) == 14
    for _, G in gs:
        assert core.is_group(G)
    for i in range(len(gs)):
        for j in range(i + 1, len(gs)):
            assert not is_isomorphic(gs[i][1], gs[j][1])


def test_semilattices():
    two = C.semilattice_from_order(["0", "e"], [("0", "e")])
    assert core.is_semilattice(two) and is_isomorphic(two, C.chain(2))
    ac = C.antichain_with_zero(2)
    assert ac.order == 3 and core.is_semilattice(ac) and not core.is_chain(ac)
    with pytest.raises(NotAMeetSemilattice):
        C.semilattice_from_order(["a", "b", "c", "d"], [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")])
    d = C.dual_chain(C.chain(3))
    assert is_isomorphic(d, C.chain(3))


def test_strong_semilattice_examples():
    E = C.chain(2)
    triv = C.strong_semilattice(C.StrongSemilatticeSpec(
        E, {e: C.cyclic_group(1) for e in range(2)}, {(1, 0): (0,)}))
    assert is_isomorphic(triv, E)
    A, B, theta = C.c2_and_n2_over(E)
    assert A.order == B.order == 4
    assert props.is_clifford(A) and core.is_inverse_semigroup(A)
    assert core.is_idempotent_commutative(B) and not core.is_regular(B)
    assert core.is_commutative(A) and core.is_commutative(B)


def test_retract_extension_gives_inflation():
    n2 = C.null_semigroup(2)
    spec = C.RetractExtensionSpec(C.cyclic_group(1), n2, n2.index_of("0"), {n2.index_of("z"): 0})
    ext = C.retract_extension(spec)
    assert is_isomorphic(ext.semigroup, C.inflate_at_identity(C.cyclic_group(1)))
    G = C.cyclic_group(3)
    spec = C.RetractExtensionSpec(G, n2, 0, {1: 0})
    ext = C.retract_extension(spec)
    assert is_isomorphic(ext.semigroup, C.inflate_at_identity(G))
    t = ext.semigroup.table
    assert all(t[a][b] == G.table[a][b] for a in range(3) for b in range(3))


def test_retract_extension_rejects_bad_eta():
    T = C.adjoin_zero(C.cyclic_group(2))    # e, g, 0
    with pytest.raises(NotPartialHom):
        C.retract_extension(C.RetractExtensionSpec(C.cyclic_group(2), T, 2, {0: 1, 1: 1}))


def test_brandt5():
    S = C.brandt5()
    assert S.order == 5 and core.is_inverse_semigroup(S)
    assert core.is_combinatorial(S)


def test_munn_examples():
    assert is_isomorphic(C.munn(C.chain(3)).semigroup, C.chain(3))
    assert is_isomorphic(C.munn(C.antichain_with_zero(2)).semigroup, C.brandt5())
    assert C.munn(C.chain(1)).semigroup.order == 1
    with pytest.raises(NotASemilattice):
        C.munn(C.cyclic_group(2))


def test_munn_d_relation_matches_ideal_shapes():
    from pamona.verify import semilattices_upto
    for E in semilattices_upto(5):
        m = C.munn(E)
        T = m.semigroup
        g = core.green(T)
        ideals = [sorted(C.principal_ideal(E, e)) for e in range(E.order)]
        # idempotent of T_E for e is the identity map on Ee
        ident = {}
        for i, a in enumerate(m.maps):
            if a.is_identity():
                ident[max(a.domain, key=lambda x: len(C.principal_ideal(E, x)))] = i
        assert len(core.idempotents(T)) == E.order
        for e in range(E.order):
            for f in range(E.order):
                same_d = g.d_index[ident[e]] == g.d_index[ident[f]]
                iso = oracles.isomorphic(E.subsemigroup(ideals[e])[0].table,
                                         E.subsemigroup(ideals[f])[0].table)
                assert same_d == iso


def test_figure1_truncation():
    for k in (1, 2, 3):
        E = C.figure1_truncation(k)
        assert E.order == 2 * k + 5
        assert core.is_semilattice(E)
