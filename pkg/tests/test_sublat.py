import pytest

from pamona import construct as C
from pamona import core
from pamona.core import members_of
from pamona.errors import NotASemilattice, NotInverse
from pamona.partial import PartialBijection
from pamona.sublat import (INVERSE, atoms, base_partial_bijection, e_bijection,
                           induced_lattice_iso, induces_lattice_iso, lattice_isomorphisms,
                           sub_lattice, sub_members_bruteforce, subi_lattice, weak_iso_check)

import oracles


def sets(L):
    return set(L.sets())


def test_sub_matches_definition(order4_semigroups):
    for S in order4_semigroups:
        assert sets(sub_lattice(S)) == set(oracles.subsemigroups(S.table))


def test_bfs_matches_subset_filter_up_to_order_6():
    cases = [C.monogenic_mn(3, 4), C.cyclic_group(6), C.inflate_at_identity(C.cyclic_group(5)),
             C.adjoin_zero(C.brandt5()), C.direct_product(C.chain(2), C.cyclic_group(3)),
             C.left_zero(6), C.null_semigroup(6), C.symmetric_group(3)]
    for S in cases:
        assert set(sub_lattice(S).members) == set(sub_members_bruteforce(S))
        if core.is_inverse_semigroup(S):
            assert set(subi_lattice(S).members) == set(sub_members_bruteforce(S, inverse=True))


def test_subi_requires_inverse():
    with pytest.raises(NotInverse):
        subi_lattice(C.null_semigroup(2))


def test_atoms():
    assert [members_of(a) for a in atoms(sub_lattice(C.cyclic_group(2)))] == [[0]]
    assert len(atoms(sub_lattice(C.chain(3)))) == 3
    M = C.monogenic_mn(2, 1)
    assert [members_of(a) for a in atoms(sub_lattice(M))] == [[1]]


def test_meet_and_join_closed(order4_semigroups):
    for S in order4_semigroups:
        L = sub_lattice(S)
        for i in range(len(L)):
            for j in range(len(L)):
                L.meet(i, j)
                L.join(i, j)


def test_subi_is_sublattice(order4_semigroups):
    for S in order4_semigroups:
        if not core.is_inverse_semigroup(S):
            continue
        L, Li = sub_lattice(S), subi_lattice(S)
        assert set(Li.members) <= set(L.members)
        for i in range(len(Li)):
            for j in range(len(Li)):
                joined = Li.members[Li.join(i, j)]
                assert joined == L.members[L.join(L.index[Li.members[i]], L.index[Li.members[j]])]


def test_lattice_isomorphisms_examples():
    L = sub_lattice(C.brandt5())
    isos = list(lattice_isomorphisms(L, L))
    assert any(all(i == j for i, j in enumerate(f.mapping)) for f in isos)
    assert all(f.verify() for f in isos)
    a, b = sub_lattice(C.cyclic_group(2)), sub_lattice(C.null_semigroup(2))
    assert next(lattice_isomorphisms(a, b, limit=1), None) is not None
    chain3 = sub_lattice(C.cyclic_group(2))
    diamond = sub_lattice(C.left_zero(2))
    assert next(lattice_isomorphisms(chain3, diamond, limit=1), None) is None


def test_lattice_isos_ignore_member_size():
    a, b = sub_lattice(C.cyclic_group(2)), sub_lattice(C.cyclic_group(3))
    assert next(lattice_isomorphisms(a, b, limit=1), None) is not None


def test_e_bijection_examples():
    L = sub_lattice(C.brandt5())
    ident = next(f for f in lattice_isomorphisms(L, L) if list(f.mapping) == list(range(len(L))))
    assert e_bijection(ident).image == tuple(x if x in core.idempotents(C.brandt5()) else -1 for x in range(5))
    n2 = C.null_semigroup(2)
    psi = next(lattice_isomorphisms(sub_lattice(C.cyclic_group(2)), sub_lattice(n2)))
    assert e_bijection(psi).image[0] == n2.index_of("0")


def test_dual_chain_e_bijection_is_order_reversing():
    # Sub of a 2-chain: {}, {0}, {1}, {0,1}; the swap of the two atoms is a lattice automorphism
    E = C.chain(2)
    L = sub_lattice(E)
    isos = list(lattice_isomorphisms(L, L))
    flips = [e_bijection(f) for f in isos if e_bijection(f).image == (1, 0)]
    assert flips
    assert weak_iso_check(flips[0], E, E)


def test_weak_iso_examples():
    ac = C.antichain_with_zero(2)
    swap = PartialBijection((1, 0, 2), 3)
    assert weak_iso_check(swap, ac, ac)
    E = C.chain(3)
    assert weak_iso_check(PartialBijection((0, 1, 2), 3), E, E)
    assert weak_iso_check(PartialBijection((2, 1, 0), 3), E, E)
    with pytest.raises(NotASemilattice):
        weak_iso_check(PartialBijection((0, 1), 2), C.left_zero(2), C.left_zero(2))


def test_every_e_bijection_is_weak_iso(order4_semigroups):
    for S in order4_semigroups:
        if not core.is_idempotent_commutative(S):
            continue
        L = sub_lattice(S)
        for f in lattice_isomorphisms(L, L, limit=20):
            assert weak_iso_check(e_bijection(f), S, S)


def test_base_partial_bijection_b5():
    S = C.brandt5()
    L = subi_lattice(S)
    assert L.kind == INVERSE
    b, bi = S.index_of("b"), S.index_of("b'")
    ident = next(f for f in lattice_isomorphisms(L, L) if list(f.mapping) == list(range(len(L))))
    assert base_partial_bijection(ident).image == tuple(range(5))
    # the involution fixes every inverse subsemigroup, so its projectivity is the identity
    iota = core.natural_involution(S)
    assert induced_lattice_iso(iota, L, L).mapping == tuple(range(len(L)))
    # the automorphism swapping b and b' (and the two idempotents) gives the swap
    aut = [0] * 5
    for x, y in (("0", "0"), ("b", "b'"), ("b'", "b"), ("bb'", "b'b"), ("b'b", "bb'")):
        aut[S.index_of(x)] = S.index_of(y)
    theta = PartialBijection(tuple(aut), 5)
    psi = induced_lattice_iso(theta, L, L)
    base = base_partial_bijection(psi)
    assert base.image[b] == bi and base.image[bi] == b
    assert base.is_total()
    assert induces_lattice_iso(theta, psi)
