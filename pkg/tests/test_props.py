import pytest

from pamona import construct as C
from pamona import core, pam, props
from pamona.errors import NotAGroup, NotInverse
from pamona.isotest import pa_isomorphic, is_isomorphic


def test_isolated_idempotents():
    G = C.cyclic_group(4)
    assert props.isolated_idempotents(G) == {0}
    S = C.brandt5()
    assert props.isolated_idempotents(S) == {S.index_of("0")}
    Z = C.adjoin_zero(C.cyclic_group(2))
    assert props.isolated_idempotents(Z) == core.idempotents(Z)


def test_c2_times_odd():
    d = props.c2_times_odd(C.cyclic_group(6))
    assert d is not None and len(d.A) == 2 and len(d.P) == 3
    P, _ = C.cyclic_group(6).subsemigroup(d.P)
    assert is_isomorphic(P, C.cyclic_group(3))
    assert props.c2_times_odd(C.cyclic_group(4)) is None
    assert props.c2_times_odd(C.cyclic_group(3)) is None
    assert props.c2_times_odd(C.cyclic_group(2)) is not None
    with pytest.raises(NotAGroup):
        props.c2_times_odd(C.null_semigroup(2))


def test_c2_times_odd_over_small_groups():
    for name, G in C.small_groups(8):
        d = props.c2_times_odd(G)
        invol = [x for x in range(G.order) if x != 0 and G.table[x][x] == core.identity_element(G)]
        # cyclic groups of order 2 * odd are exactly the ones that split here (up to order 8)
        expected = name in ("C2", "C6")
        assert (d is not None) == expected, name
        if d is not None:
            assert len(d.A) * len(d.P) == G.order and len(invol) == 1


def test_no_split_isolated_subgroup():
    assert props.theorem313_member(C.brandt5())
    assert not props.theorem313_member(C.cyclic_group(6))
    assert not props.theorem313_member(C.null_semigroup(2))
    assert props.theorem313_member(C.cyclic_group(3))


def test_combinatorial_inverse_in_all_classes(order4_semigroups):
    for S in order4_semigroups:
        if props.combinatorial_inverse(S):
            assert props.theorem313_member(S)
            assert props.no_nontrivial_isolated(S)
            assert props.no_isolated_order2(S)


def test_a_covered():
    S = C.brandt5()
    z, b = S.index_of("0"), S.index_of("b")
    bb = S.index_of("bb'")
    assert props.is_a_covered(S, z, b)
    assert not props.is_a_covered(S, bb, b)
    E = C.chain(3)
    assert props.is_a_covered(E, 0, 2)
    with pytest.raises(NotInverse):
        props.is_a_covered(C.null_semigroup(2), 0, 0)


def test_short_bypass():
    S = C.brandt5()
    z, b, bb = S.index_of("0"), S.index_of("b"), S.index_of("bb'")
    bp = props.short_bypass(S, z, b)
    assert bp.chain == (z, bb)
    assert props.short_bypass(S, bb, b) is None


def test_short_bypass_prefers_short_chains():
    E = C.chain(4)
    # [[top]] = {top}, so bottom is covered by top in one step
    bp = props.short_bypass(E, 0, 3)
    assert bp.chain == (0, 3)


def test_finite_inverse_shortly_linked_and_connected(order4_semigroups):
    for S in order4_semigroups:
        if core.is_inverse_semigroup(S):
            assert props.is_shortly_linked(S)
            assert props.is_shortly_connected(S)
    for E in (C.figure1_truncation(2), C.munn(C.figure1_truncation(1)).semigroup):
        assert props.is_shortly_connected(E)


def test_completely_semisimple_everywhere(order4_semigroups):
    for S in order4_semigroups:
        assert props.is_completely_semisimple(S)


def test_clifford_and_e_unitary():
    A, B, _ = C.c2_and_n2_over(C.chain(2))
    assert props.is_clifford(A)
    assert not props.is_clifford(B)
    assert props.is_e_unitary(C.cyclic_group(3))
    assert not props.is_e_unitary(C.brandt5())


def test_fundamental():
    assert props.is_fundamental(C.brandt5())
    assert not props.is_fundamental(C.cyclic_group(2))
    assert props.is_fundamental(C.chain(3))
    with pytest.raises(NotInverse):
        props.is_fundamental(C.null_semigroup(2))


def test_archimedean_family():
    r = props.archimedean_family(C.brandt5())
    assert r.pseudo and r.faintly and r.quasi and r.finite_vacuity
    assert r.nongroup_monogenic_combinatorial
    r = props.archimedean_family(C.cyclic_group(2))
    assert r.quasi and r.nongroup_monogenic_combinatorial
    m = C.munn(C.figure1_truncation(1)).semigroup
    r = props.archimedean_family(m)
    assert r.pseudo and r.faintly and r.quasi


def test_h_class_images_on_pa_pairs(order4_semigroups):
    # for inverse S with a PA-partner T: H_e maps to H_{e phi} or H_{e phi} plus one nonregular element
    checked = 0
    for S in order4_semigroups:
        if not core.is_inverse_semigroup(S):
            continue
        for T in order4_semigroups:
            if T.order != S.order:
                continue
            v = pa_isomorphic(S, T)
            if not v:
                continue
            checked += 1
            gs, gt = core.green(S), core.green(T)
            reg = core.regular_elements(T)
            iso_s = props.isolated_idempotents(S)
            for e in core.idempotents(S):
                f = v.phi_e.image[e]
                img = set(core.members_of(v.star(core.mask_of(gs.H(e)))))
                H = set(gt.H(f))
                extra = img - H
                assert H <= img
                assert not extra or (len(extra) == 1 and not (extra & reg))
                if e not in iso_s:
                    assert not extra
            for z in set(range(T.order)) - reg:
                # z sits over an isolated subgroup of order 2 of S
                pre = v.star.inverse()(core.mask_of(core.monogenic(T, z)))
                sub = core.members_of(pre)
                G, _ = S.subsemigroup(sub)
                assert core.is_group(G) and G.order == 2
                e = next(x for x in sub if x in core.idempotents(S))
                assert e in iso_s
    assert checked > 0


def test_summary_keys():
    info = props.summary(C.brandt5())
    for k in ("inverse", "fundamental", "shortly_connected", "no_split_isolated", "c2_times_odd"):
        assert k in info


def test_pa_monoid_of_c2_unchanged():
    assert len(pam.pa_monoid(C.cyclic_group(2))) == 3
