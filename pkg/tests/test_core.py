import pytest

from pamona import construct as C
from pamona import core
from pamona.core import Semigroup
from pamona.errors import NotAssociative, NotInverse, OutOfRange

import oracles


def b5():
    return C.brandt5()


def test_trivial_and_c2():
    assert core.validate([[0]]).order == 1
    c2 = core.validate([[0, 1], [1, 0]])
    assert core.is_group(c2)


def test_first_nonassociative_2x2_found_by_search():
    from itertools import product
    bad = None
    for flat in product(range(2), repeat=4):
        t = [list(flat[:2]), list(flat[2:])]
        if not oracles.assoc(t):
            bad = t
            break
    with pytest.raises(NotAssociative) as err:
        Semigroup(bad)
    i, j, k = err.value.triple
    assert bad[bad[i][j]][k] != bad[i][bad[j][k]]


def test_reports_first_failing_triple_in_row_major_order():
    t = [[0, 0, 0], [0, 0, 1], [0, 2, 0]]
    expected = next((i, j, k) for i in range(3) for j in range(3) for k in range(3)
                    if t[t[i][j]][k] != t[i][t[j][k]])
    with pytest.raises(NotAssociative) as err:
        Semigroup(t)
    assert err.value.triple == expected


def test_out_of_range_and_shape():
    with pytest.raises(OutOfRange):
        Semigroup([[0, 2], [1, 0]])
    with pytest.raises(ValueError):
        Semigroup([[0, 1]])
    with pytest.raises(ValueError):
        Semigroup([[0]], ["a", "b"])


def test_idempotents_examples():
    assert core.idempotents(C.cyclic_group(2)) == {0}
    n2 = C.null_semigroup(2)
    assert core.idempotents(n2) == {n2.index_of("0")}
    assert len(core.idempotents(C.monogenic_mn(3, 6))) == 1


def test_regular_elements():
    assert core.regular_elements(C.cyclic_group(5)) == set(range(5))
    n2 = C.null_semigroup(2)
    assert core.regular_elements(n2) == {n2.index_of("0")}
    q = C.inflate_at_identity(C.cyclic_group(3))
    assert core.regular_elements(q) == {0, 1, 2}


def test_inverses_of():
    S = b5()
    b, bi = S.index_of("b"), S.index_of("b'")
    assert core.inverses_of(S, b) == {bi}
    for e in core.idempotents(S):
        assert e in core.inverses_of(S, e)
    n2 = C.null_semigroup(2)
    assert core.inverses_of(n2, n2.index_of("z")) == set()


def test_inverse_semigroup_recognition():
    assert core.is_inverse_semigroup(b5())
    assert not core.is_inverse_semigroup(C.null_semigroup(2))
    assert core.is_inverse_semigroup(C.chain(4))
    assert core.is_inverse_semigroup(C.antichain_with_zero(3))
    with pytest.raises(NotInverse):
        core.inverse_map(C.null_semigroup(2))


def test_green_examples():
    g = core.green(C.cyclic_group(4))
    assert len(g.h_classes) == len(g.d_classes) == len(g.j_classes) == 1
    S = b5()
    g = core.green(S)
    assert sorted(map(len, g.d_classes)) == [1, 4]
    M = C.monogenic_mn(3, 1)
    g = core.green(M)
    assert g.j_classes == (frozenset({0}), frozenset({1}), frozenset({2}))
    # x^3 below x^2 below x
    assert (2, 1) in g.j_order and (1, 0) in g.j_order and (2, 0) in g.j_order


def test_green_matches_definitions(order4_semigroups):
    for S in order4_semigroups:
        want = oracles.green_partitions(S.table)
        g = core.green(S)
        assert sorted(g.l_classes, key=min) == want["L"]
        assert sorted(g.r_classes, key=min) == want["R"]
        assert sorted(g.h_classes, key=min) == want["H"]
        assert sorted(g.d_classes, key=min) == want["D"]
        assert sorted(g.j_classes, key=min) == want["J"]


def test_natural_order_examples():
    ch = C.chain(2)
    no = core.natural_order(ch)
    assert no.leq(0, 1) and not no.leq(1, 0)
    S = b5()
    no = core.natural_order(S)
    z = S.index_of("0")
    others = [x for x in range(5) if x != z]
    assert all(no.lt(z, x) for x in others)
    assert not any(no.leq(x, y) for x in others for y in others if x != y)
    g = core.natural_order(C.cyclic_group(3))
    assert g.pairs() == {(i, i) for i in range(3)}


def test_natural_order_compatible_with_inversion(order4_semigroups):
    for S in order4_semigroups:
        if not core.is_inverse_semigroup(S):
            continue
        no = core.natural_order(S)
        inv = core.inverse_map(S)
        t = S.table
        for a, b in no.pairs():
            assert no.leq(inv[a], inv[b])
            for c, d in no.pairs():
                assert no.leq(t[a][c], t[b][d])


def test_element_profiles():
    p = core.element_profile(C.monogenic_mn(3, 6), 0)
    assert (p.order, p.index, p.period) == (8, 3, 6)
    p = core.element_profile(C.cyclic_group(4), 1)
    assert (p.order, p.index, p.period) == (4, 1, 4)
    e = core.element_profile(C.cyclic_group(4), 0)
    assert (e.order, e.index, e.period) == (1, 1, 1)


def test_monogenic_sets():
    S = b5()
    assert core.monogenic_inverse(S, S.index_of("b")) == set(range(5))
    n2 = C.null_semigroup(2)
    assert core.monogenic(n2, n2.index_of("z")) == {0, 1}
    assert core.monogenic(S, S.index_of("bb'")) == {S.index_of("bb'")}


def test_M_and_N_sets():
    assert core.M_set(C.cyclic_group(3)) == {0}
    assert core.M_set(C.null_semigroup(2)) == {0, 1}
    S = b5()
    assert core.N_set(S) == {S.index_of("b"), S.index_of("b'")}


def test_class_predicates():
    assert core.is_combinatorial(b5())
    assert not core.is_combinatorial(C.cyclic_group(2))
    assert core.is_chain(C.chain(3))
    assert not core.is_chain(C.antichain_with_zero(2))
    assert core.is_semilattice(C.antichain_with_zero(2))


def test_closure():
    S = b5()
    assert core.subsemigroup_closure(S, []) == set()
    assert core.subsemigroup_closure(S, [S.index_of("b")]) == core.monogenic(S, S.index_of("b"))
    assert core.subsemigroup_closure(S, [S.index_of("b"), S.index_of("b'")]) == set(range(5))


def test_opposite_and_involution():
    c = C.cyclic_group(4)
    assert core.opposite(c).table == c.table
    S = b5()
    assert core.opposite(core.opposite(S)).table == S.table
    iota = core.natural_involution(S)
    t = S.table
    assert all(iota.image[t[a][b]] == t[iota.image[b]][iota.image[a]] for a in range(5) for b in range(5))
    assert iota.image[S.index_of("b")] == S.index_of("b'")
    for e in core.idempotents(S):
        assert iota.image[e] == e
    assert core.natural_involution(C.chain(3)).is_identity()
    assert core.natural_involution(C.cyclic_group(3)).image == (0, 2, 1)


def test_inverses_agree_with_oracle(order4_semigroups):
    for S in order4_semigroups:
        for x in range(S.order):
            assert core.inverses_of(S, x) == oracles.inverses(S.table, x)


def test_reg_is_inverse_subsemigroup_when_idempotents_commute(order4_semigroups):
    for S in order4_semigroups:
        if not core.is_idempotent_commutative(S):
            continue
        reg = core.regular_elements(S)
        assert core.is_closed(S, reg)
        sub, _ = S.subsemigroup(reg)
        assert core.is_inverse_semigroup(sub)


def test_relabel_is_isomorphic():
    S = b5()
    T = S.relabel([4, 3, 2, 1, 0])
    assert oracles.isomorphic(S.table, T.table)
