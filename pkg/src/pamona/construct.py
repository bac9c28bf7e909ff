"""Generators for the concrete semigroup families used throughout the package."""
from dataclasses import dataclass, field
from itertools import permutations, product

from . import core
from .core import Semigroup, idempotent_leq, idempotents
from .errors import (BadMorphism, NotAChain, NotAGroup, NotAMeetSemilattice,
                     NotASemilattice, NotPartialHom)
from .partial import PartialBijection
from .search import isomorphisms as _table_isos


def from_operation(elements, op, labels=None):
    """Cayley table of ``op`` on the listed elements (validated)."""
    elements = list(elements)
    pos = {x: i for i, x in enumerate(elements)}
    table = [[pos[op(a, b)] for b in elements] for a in elements]
    if labels is None:
        labels = [str(x) for x in elements]
    return Semigroup(table, labels)


# ---------------------------------------------------------------- basic families

def cyclic_group(n):
    if n < 1:
        raise ValueError("cyclic_group needs n >= 1")
    labels = ["e"] + [f"g{k}" for k in range(1, n)]
    return Semigroup([[(a + b) % n for b in range(n)] for a in range(n)], labels)


def null_semigroup(n):
    """Zero is element 0; every product is 0."""
    if n < 1:
        raise ValueError("null_semigroup needs n >= 1")
    labels = ["0"] + (["z"] if n == 2 else [f"z{k}" for k in range(1, n)])
    return Semigroup([[0] * n for _ in range(n)], labels)


def monogenic_mn(m, n):
    """M(m, n): index m, period n, elements x^1..x^(m+n-1); x^k sits at index k-1."""
    if m < 1 or n < 1:
        raise ValueError("monogenic_mn needs m, n >= 1")
    size = m + n - 1

    def power(k):
        # reduce exponent k >= 1 into 1..size
        if k <= size:
            return k
        return m + (k - m) % n

    table = [[power(a + b + 2) - 1 for b in range(size)] for a in range(size)]
    S = Semigroup(table, [f"x{k}" if k > 1 else "x" for k in range(1, size + 1)])
    prof = core.element_profile(S, 0)
    assert (prof.order, prof.index, prof.period) == (size, m, n)
    return S


def left_zero(n):
    return Semigroup([[a] * n for a in range(n)])


def right_zero(n):
    return Semigroup([list(range(n)) for _ in range(n)])


def chain(n):
    """The n-element chain as a semilattice; element i is below element j iff i <= j."""
    return Semigroup([[min(a, b) for b in range(n)] for a in range(n)])


def symmetric_group(n):
    perms = list(permutations(range(n)))
    return from_operation(perms, lambda p, q: tuple(q[p[i]] for i in range(n)),
                          ["".join(map(str, p)) for p in perms])


def dihedral_group(n):
    """Symmetries of the n-gon, order 2n; (r, s) stands for rot^r ref^s."""
    elems = [(r, s) for s in (0, 1) for r in range(n)]

    def op(a, b):
        r1, s1 = a
        r2, s2 = b
        return ((r1 + (-r2 if s1 else r2)) % n, s1 ^ s2)
    return from_operation(elems, op, [f"r{r}" + ("s" if s else "") for r, s in elems])


def quaternion_group():
    # unit quaternions as (sign, axis) with axis in 1, i, j, k
    mult = {("1", x): (1, x) for x in "1ijk"}
    mult.update({(x, "1"): (1, x) for x in "1ijk"})
    mult.update({("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
                 ("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
                 ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")})
    elems = [(s, x) for s in (1, -1) for x in "1ijk"]

    def op(a, b):
        s, x = mult[(a[1], b[1])]
        return (a[0] * b[0] * s, x)
    return from_operation(elems, op, [("" if s > 0 else "-") + x for s, x in elems])


def small_groups(max_order):
    """One representative of each isomorphism type of group up to order 8."""
    if max_order > 8:
        raise ValueError("only groups of order <= 8 are tabulated")
    out = []
    for n in range(1, max_order + 1):
        out.append((f"C{n}", cyclic_group(n)))
        if n == 4:
            out.append(("C2xC2", direct_product(cyclic_group(2), cyclic_group(2))))
        if n == 6:
            out.append(("S3", symmetric_group(3)))
        if n == 8:
            out.append(("C2xC4", direct_product(cyclic_group(2), cyclic_group(4))))
            out.append(("C2xC2xC2", direct_product(cyclic_group(2),
                                                    direct_product(cyclic_group(2), cyclic_group(2)))))
            out.append(("D4", dihedral_group(4)))
            out.append(("Q8", quaternion_group()))
    return out


# ---------------------------------------------------------------- combinators

def inflate_at_identity(G):
    """G^<1>: G plus a new element z (index |G|) with z^2 = e and zx = xz = x."""
    if not core.is_group(G):
        raise NotAGroup("inflate_at_identity needs a group")
    n = G.order
    e = core.identity_element(G)
    z = n
    table = [list(G.table[a]) + [a] for a in range(n)]
    table.append(list(range(n)) + [e])
    labels = [G.label(i) for i in range(n)] + ["z"]
    if "z" in labels[:n]:
        labels[-1] = "z*"
    S = Semigroup(table, labels)
    assert core.monogenic(S, z) == {z, e}
    return S


def direct_product(S, T):
    """Pairs (s, t) at index s * |T| + t."""
    m = T.order
    n = S.order * m
    ts, tt = S.table, T.table
    table = [[ts[a // m][b // m] * m + tt[a % m][b % m] for b in range(n)] for a in range(n)]
    labels = [f"({S.label(a // m)},{T.label(a % m)})" for a in range(n)]
    return Semigroup._trusted(table, labels)


def adjoin_zero(S):
    """S^0 with the new zero at index |S|."""
    n = S.order
    table = [list(S.table[a]) + [n] for a in range(n)] + [[n] * (n + 1)]
    labels = [S.label(i) for i in range(n)] + ["0"]
    if "0" in labels[:n]:
        labels[-1] = "0*"
    return Semigroup._trusted(table, labels)


def adjoin_identity(S):
    n = S.order
    table = [list(S.table[a]) + [a] for a in range(n)] + [list(range(n)) + [n]]
    labels = [S.label(i) for i in range(n)] + ["1"]
    if "1" in labels[:n]:
        labels[-1] = "1*"
    return Semigroup._trusted(table, labels)


# ---------------------------------------------------------------- semilattices

def _transitive_closure(n, pairs):
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in pairs:
        leq[a][b] = True
    for k in range(n):
        for i in range(n):
            if leq[i][k]:
                row = leq[k]
                li = leq[i]
                for j in range(n):
                    if row[j]:
                        li[j] = True
    return leq


def semilattice_from_order(elements, less_equal):
    """Meet semilattice of a finite poset.

    ``less_equal`` is an iterable of pairs (a, b) meaning a <= b; the
    reflexive-transitive closure is taken.  Products are meets.
    """
    elements = list(elements)
    pos = {x: i for i, x in enumerate(elements)}
    n = len(elements)
    leq = _transitive_closure(n, [(pos[a], pos[b]) for a, b in less_equal])
    for i in range(n):
        for j in range(n):
            if i != j and leq[i][j] and leq[j][i]:
                raise ValueError(f"not antisymmetric at {elements[i]!r}, {elements[j]!r}")
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            lower = [c for c in range(n) if leq[c][a] and leq[c][b]]
            tops = [c for c in lower if all(leq[d][c] for d in lower)]
            if len(tops) != 1:
                raise NotAMeetSemilattice(elements[a], elements[b])
            table[a][b] = tops[0]
    return Semigroup(table, [str(x) for x in elements])


def semilattice_leq(E):
    """Order matrix of a semilattice: leq[a][b] iff a = ab."""
    n = E.order
    return [[E.table[a][b] == a for b in range(n)] for a in range(n)]


def dual_chain(E):
    """The chain E with its order reversed (product becomes join)."""
    if not core.is_semilattice(E):
        raise NotASemilattice("dual_chain needs a semilattice")
    if not core.is_chain(E):
        raise NotAChain("dual_chain needs a chain")
    n = E.order
    t = E.table
    # in a chain the join of a and b is whichever of them is not the meet
    table = [[b if t[a][b] == a else a for b in range(n)] for a in range(n)]
    return Semigroup(table, E.labels)


def antichain_with_zero(k=2):
    """{g0, .., g(k-1), 0}: k pairwise incomparable elements over a bottom."""
    names = [f"g{i}" for i in range(k)] + ["0"]
    return semilattice_from_order(names, [("0", g) for g in names[:-1]])


# ---------------------------------------------------------------- strong semilattices

@dataclass
class StrongSemilatticeSpec:
    """Data for [E; S_e, phi_{e,f}].

    ``components[e]`` is the semigroup over the semilattice element ``e``
    (an index of ``E``); ``morphisms[(e, f)]`` is a tuple giving the
    structure map S_e -> S_f for e >= f.  Identity maps on the diagonal
    may be omitted.
    """
    E: Semigroup
    components: dict
    morphisms: dict = field(default_factory=dict)

    def offsets(self):
        out = {}
        k = 0
        for e in range(self.E.order):
            out[e] = k
            k += self.components[e].order
        return out

    def morphism(self, e, f):
        if e == f and (e, f) not in self.morphisms:
            return tuple(range(self.components[e].order))
        return tuple(self.morphisms[(e, f)])


def _check_strong_spec(spec):
    E = spec.E
    if not core.is_semilattice(E):
        raise NotASemilattice("the index set of a strong semilattice must be a semilattice")
    n = E.order
    above = [(e, f) for e in range(n) for f in range(n) if idempotent_leq(E, f, e)]
    for e, f in above:
        try:
            phi = spec.morphism(e, f)
        except KeyError:
            raise BadMorphism(e, f, "missing") from None
        Se, Sf = spec.components[e], spec.components[f]
        if len(phi) != Se.order or any(not 0 <= v < Sf.order for v in phi):
            raise BadMorphism(e, f, "not a map between the components")
        if e == f and phi != tuple(range(Se.order)):
            raise BadMorphism(e, f, "diagonal map is not the identity")
        for a in range(Se.order):
            for b in range(Se.order):
                if phi[Se.table[a][b]] != Sf.table[phi[a]][phi[b]]:
                    raise BadMorphism(e, f, "not a homomorphism")
    for e, f in above:
        for g in range(n):
            if idempotent_leq(E, g, f):
                pef, pfg, peg = spec.morphism(e, f), spec.morphism(f, g), spec.morphism(e, g)
                if any(pfg[pef[a]] != peg[a] for a in range(len(pef))):
                    raise BadMorphism(e, g, f"does not factor through {f}")


def strong_semilattice(spec):
    """The semigroup [E; S_e, phi_{e,f}]; element (e, s) sits at offset(e) + s."""
    _check_strong_spec(spec)
    E = spec.E
    off = spec.offsets()
    carrier = [(e, s) for e in range(E.order) for s in range(spec.components[e].order)]
    pos = {c: i for i, c in enumerate(carrier)}
    table = []
    for e, s in carrier:
        row = []
        for f, t in carrier:
            g = E.table[e][f]
            u = spec.morphism(e, g)[s]
            v = spec.morphism(f, g)[t]
            row.append(pos[(g, spec.components[g].table[u][v])])
        table.append(row)
    labels = []
    for e, s in carrier:
        comp = spec.components[e]
        labels.append(f"{comp.label(s)}@{E.label(e)}")
    S = Semigroup(table, labels)
    groups = all(core.is_group(spec.components[e]) for e in range(E.order))
    if groups:
        assert core.is_regular(S) and _idempotents_central(S)
    if all(core.is_commutative(spec.components[e]) for e in range(E.order)):
        assert core.is_commutative(S)
    return S


def _idempotents_central(S):
    t = S.table
    return all(t[e][x] == t[x][e] for e in idempotents(S) for x in range(S.order))


def c2_and_n2_over(E):
    """The pair A, B and the bijection theta from the Clifford/null example.

    A has components {e, a_e} = C2 and B has components {e, z_e} = N2 over
    every e of the semilattice E; for e > f both structure maps collapse
    the component onto f.  theta fixes each e and sends a_e to z_e.
    Elements of both are laid out as (e, identity) at 2e and the other
    component element at 2e + 1, so theta is the identity on indices.
    """
    n = E.order
    c2 = Semigroup([[0, 1], [1, 0]], ["e", "a"])
    n2 = Semigroup([[0, 0], [0, 0]], ["e", "z"])
    morph = {(e, f): (0, 0) for e in range(n) for f in range(n)
             if e != f and idempotent_leq(E, f, e)}
    A = strong_semilattice(StrongSemilatticeSpec(E, {e: c2 for e in range(n)}, morph))
    B = strong_semilattice(StrongSemilatticeSpec(E, {e: n2 for e in range(n)}, morph))
    theta = PartialBijection(tuple(range(2 * n)), 2 * n)
    return A, B, theta


# ---------------------------------------------------------------- retract extensions

@dataclass
class RetractExtensionSpec:
    """A semigroup ``A``, a semigroup ``T`` with zero ``zero``, and eta: T* -> A.

    ``eta`` maps each nonzero index of ``T`` to an index of ``A``.
    """
    A: Semigroup
    T: Semigroup
    zero: int
    eta: dict


@dataclass(frozen=True)
class RetractExtension:
    semigroup: Semigroup
    from_A: tuple      # index in A -> index in the extension
    from_T: dict       # nonzero index in T -> index in the extension
    retraction: tuple  # extension index -> index in A


def retract_extension(spec):
    """Extension of A by T determined by the partial homomorphism eta.

    A keeps indices 0..|A|-1 and the nonzero elements of T follow in
    increasing order, so the two carriers are disjoint by construction.
    """
    A, T, z, eta = spec.A, spec.T, spec.zero, dict(spec.eta)
    if core.zero_element(T) != z:
        raise ValueError(f"element {z} is not the zero of T")
    tstar = [x for x in range(T.order) if x != z]
    if set(eta) != set(tstar):
        raise ValueError("eta must be defined on every nonzero element of T")
    ta, tt = A.table, T.table
    for x in tstar:
        for y in tstar:
            xy = tt[x][y]
            if xy != z and eta[xy] != ta[eta[x]][eta[y]]:
                raise NotPartialHom(x, y)
    na = A.order
    pos_t = {x: na + i for i, x in enumerate(tstar)}
    back = {v: k for k, v in pos_t.items()}
    n = na + len(tstar)

    def mul(a, b):
        if a < na and b < na:
            return ta[a][b]
        if a < na:
            return ta[a][eta[back[b]]]
        if b < na:
            return ta[eta[back[a]]][b]
        x, y = back[a], back[b]
        xy = tt[x][y]
        if xy != z:
            return pos_t[xy]
        return ta[eta[x]][eta[y]]

    table = [[mul(a, b) for b in range(n)] for a in range(n)]
    labels = [A.label(i) for i in range(na)] + [T.label(x) for x in tstar]
    if len(set(labels)) != n:
        labels = [A.label(i) for i in range(na)] + [T.label(x) + "'" for x in tstar]
    S = Semigroup(table, labels)
    retraction = tuple(list(range(na)) + [eta[x] for x in tstar])
    for a in range(na):
        for b in range(n):
            assert S.table[a][b] < na and S.table[b][a] < na
    for a in range(n):
        for b in range(n):
            assert retraction[S.table[a][b]] == ta[retraction[a]][retraction[b]]
    return RetractExtension(S, tuple(range(na)), pos_t, retraction)


# ---------------------------------------------------------------- inverse examples

def brandt5():
    """B5 = {0, b, b', bb', b'b} realised as partial bijections of a 2-set."""
    maps = {
        "0": PartialBijection.empty(2),
        "b": PartialBijection.from_pairs({0: 1}, 2),
        "b'": PartialBijection.from_pairs({1: 0}, 2),
        "bb'": PartialBijection.identity([0], 2),
        "b'b": PartialBijection.identity([1], 2),
    }
    names = list(maps)
    lookup = {m: k for k, m in maps.items()}
    table = [[names.index(lookup[maps[a].then(maps[b])]) for b in names] for a in names]
    return Semigroup(table, names)


@dataclass(frozen=True)
class MunnSemigroup:
    semigroup: Semigroup
    maps: tuple  # element index -> PartialBijection on E


def principal_ideal(E, e):
    return frozenset(f for f in range(E.order) if E.table[f][e] == f)


def munn(E):
    """T_E: all isomorphisms between principal ideals of the semilattice E."""
    if not core.is_semilattice(E):
        raise NotASemilattice("munn needs a semilattice")
    n = E.order
    ideals = [sorted(principal_ideal(E, e)) for e in range(n)]
    subs = [E.subsemigroup(I)[0] for I in ideals]
    maps = []
    for e in range(n):
        for f in range(n):
            if len(ideals[e]) != len(ideals[f]):
                continue
            for iso in _table_isos(subs[e].table, subs[f].table):
                pairs = {ideals[e][i]: ideals[f][j] for i, j in enumerate(iso)}
                maps.append(PartialBijection.from_pairs(pairs, n))
    maps.sort(key=PartialBijection.sort_key)
    index = {m: i for i, m in enumerate(maps)}
    table = [[index[a.then(b)] for b in maps] for a in maps]

    def describe(m):
        return "{" + ",".join(f"{E.label(x)}>{E.label(y)}" for x, y in m.pairs()) + "}"
    S = Semigroup(table, [describe(m) for m in maps])
    from . import props
    assert core.is_inverse_semigroup(S)
    assert props.is_fundamental(S)
    assert len(idempotents(S)) == n
    return MunnSemigroup(S, tuple(maps))


def figure1_truncation(k):
    """Finite cut of the ladder semilattice e_i, f_i, g0, g1, 0 up to level k.

    Order: e_0 > e_1 > ... > e_k, each e_i > f_i, f_i > g_(i mod 2), and
    g0, g1 > 0.  The cut keeps e- and f-levels 0..k, so the order is 2k + 5.
    """
    if k < 1:
        raise ValueError("figure1_truncation needs k >= 1")
    names = [f"e{i}" for i in range(k + 1)] + [f"f{i}" for i in range(k + 1)] + ["g0", "g1", "0"]
    rel = [(f"e{i + 1}", f"e{i}") for i in range(k)]
    rel += [(f"f{i}", f"e{i}") for i in range(k + 1)]
    rel += [(f"g{i % 2}", f"f{i}") for i in range(k + 1)]
    rel += [("0", "g0"), ("0", "g1")]
    return semilattice_from_order(names, rel)
