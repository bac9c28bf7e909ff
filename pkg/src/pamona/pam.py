"""Partial automorphism monoids PA(S), PAi(S) and the maps a PA-isomorphism induces.

A PA-isomorphism is represented by an :class:`~pamona.witness.IsoWitness`
of kind ``"pa-iso"`` (or ``"monoid-iso"``) whose source and target are the
:class:`FiniteMonoid` objects returned by :func:`pa_monoid`.
"""
from dataclasses import dataclass

import numpy as np

from . import core
from .core import Semigroup, members_of, popcount
from .errors import (EvenOrder, IdempotentImageNotIdentityMap, NonUniqueGenerator,
                     NotInverse, RestrictionNotPA, SizeCapExceeded)
from .partial import UNDEFINED, PartialBijection, transport
from .search import isomorphisms as _table_isos
from .search import refine_signatures, table_signatures
from .sublat import LatticeIso, sub_lattice, subi_lattice
from .witness import MONOID_ISO, PA_ISO, IsoWitness

DEFAULT_CAP = 20000


class FiniteMonoid:
    """A monoid given by its table, with optional provenance.

    When built by :func:`pa_monoid`, ``elements[i]`` is the partial
    automorphism behind index ``i``, ``semigroup`` is the carrier and
    ``lattice`` the subsemigroup lattice whose identity maps are the
    idempotents.
    """

    def __init__(self, table, identity, zero=None, elements=None, semigroup=None,
                 lattice=None, kind=None):
        arr = np.asarray(table, dtype=np.int64)
        arr.setflags(write=False)
        self.array = arr
        self.table = tuple(tuple(int(v) for v in r) for r in arr.tolist())
        self.identity = identity
        self.zero = zero
        self.elements = tuple(elements) if elements is not None else None
        self.semigroup = semigroup
        self.lattice = lattice
        self.kind = kind
        self._index = None
        n = len(self.table)
        t = self.table
        assert all(t[identity][x] == x == t[x][identity] for x in range(n))
        if zero is not None:
            assert all(t[zero][x] == zero == t[x][zero] for x in range(n))

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    def __repr__(self):
        return f"FiniteMonoid(order={self.order}, kind={self.kind!r})"

    def index_of(self, alpha):
        if self._index is None:
            self._index = {a.image: i for i, a in enumerate(self.elements)}
        return self._index.get(alpha.image)

    def idempotents(self):
        t = self.table
        return [i for i in range(self.order) if t[i][i] == i]

    def identity_map_of(self, mask):
        """Index of 1_H for the member H (given as a bitmask)."""
        n = self.semigroup.order if self.semigroup is not None else 0
        return self.index_of(PartialBijection.identity(members_of(mask), n))

    def as_semigroup(self):
        labels = None
        if self.elements is not None:
            labels = [describe_map(a) for a in self.elements]
        return Semigroup._trusted(self.table, labels)

    def check_associative(self):
        return core.first_associativity_failure(self.array) is None


def describe_map(alpha):
    return "{" + ",".join(f"{x}>{y}" for x, y in alpha.pairs()) + "}"


# ---------------------------------------------------------------- enumeration

def _iso_classes(S, members):
    """Group members by isomorphism type.

    Returns a list of classes; each class is (automorphisms of the
    representative, [(member, local elements, witness rep -> member)]).
    """
    classes = []
    buckets = {}
    for m in members:
        elems = members_of(m)
        if not elems:
            classes.append(([()], [(m, (), ())]))
            continue
        sub, _ = S.subsemigroup(elems)
        sig = refine_signatures(sub.table, table_signatures(sub.table))
        key = (len(elems), tuple(sorted(map(repr, sig))))
        placed = False
        for ci in buckets.get(key, []):
            auts, entries, rep_table, rep_sig = classes[ci]
            w = next(_table_isos(rep_table, sub.table, rep_sig, sig, limit=1), None)
            if w is not None:
                entries.append((m, tuple(elems), w))
                placed = True
                break
        if not placed:
            auts = list(_table_isos(sub.table, sub.table, sig, sig))
            classes.append((auts, [(m, tuple(elems), tuple(range(len(elems))))], sub.table, sig))
            buckets.setdefault(key, []).append(len(classes) - 1)
    return [(c[0], c[1]) for c in classes]


def partial_automorphisms(S, inverse_only=False, cap=DEFAULT_CAP):
    """All isomorphisms between (inverse) subsemigroups, canonically ordered."""
    L = subi_lattice(S) if inverse_only else sub_lattice(S)
    classes = _iso_classes(S, L.members)
    size = sum(len(auts) * len(entries) ** 2 for auts, entries in classes)
    if size > cap:
        raise SizeCapExceeded(f"PA would have {size} elements (cap {cap})")
    n = S.order
    out = []
    for auts, entries in classes:
        for _, h_elems, wh in entries:
            # local rep index -> element of H, and its inverse
            inv_wh = {h_elems[wh[i]]: i for i in range(len(wh))}
            for _, k_elems, wk in entries:
                for a in auts:
                    img = [UNDEFINED] * n
                    for x, i in inv_wh.items():
                        img[x] = k_elems[wk[a[i]]]
                    out.append(PartialBijection(tuple(img), n))
    out.sort(key=PartialBijection.sort_key)
    return out


def _composition_table(elements, n):
    m = len(elements)
    E = np.array([a.image for a in elements], dtype=np.int64).reshape(m, n)
    ext = np.concatenate([E, np.full((m, 1), UNDEFINED, dtype=np.int64)], axis=1)
    use_codes = n == 0 or (n + 1) ** n < 2 ** 62
    if use_codes:
        weights = np.array([(n + 1) ** x for x in range(n)], dtype=np.int64)
        codes = ((E + 1) * weights).sum(axis=1) if n else np.zeros(m, dtype=np.int64)
        order = np.argsort(codes, kind="stable")
        sorted_codes = codes[order]
    else:
        lookup = {row.tobytes(): i for i, row in enumerate(E)}
    table = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        idx = np.where(E[a] < 0, n, E[a])
        comp = ext[:, idx]            # row b: a followed by b
        if use_codes:
            c = ((comp + 1) * weights).sum(axis=1) if n else np.zeros(m, dtype=np.int64)
            pos = np.searchsorted(sorted_codes, c)
            pos = np.minimum(pos, m - 1)
            if not (sorted_codes[pos] == c).all():
                raise AssertionError("composition left the enumerated set")
            table[a, :] = order[pos]
        else:
            for b in range(m):
                table[a, b] = lookup[np.ascontiguousarray(comp[b]).tobytes()]
    # table[a, b] is "a then b"
    return table


def _build_monoid(S, elements, lattice, kind):
    n = S.order
    table = _composition_table(elements, n)
    ident = next(i for i, a in enumerate(elements) if a.is_total() and a.is_identity())
    zero = 0
    assert len(elements[0]) == 0
    M = FiniteMonoid(table, ident, zero, elements, S, lattice, kind)
    _check_pa_structure(M)
    return M


def _check_pa_structure(M):
    L = M.lattice
    elements = M.elements
    # closed under inverses, so an inverse submonoid of I_S
    for a in elements:
        assert M.index_of(a.inverse()) is not None
    idem = set(M.idempotents())
    ids = {M.identity_map_of(m) for m in L.members}
    assert None not in ids and idem == ids
    # idempotent order matches inclusion of members
    t = M.table
    idx = [M.identity_map_of(m) for m in L.members]
    for i, a in enumerate(idx):
        for j, b in enumerate(idx):
            assert (t[a][b] == a) == L.leq(i, j)


def pa_monoid(S, cap=DEFAULT_CAP):
    def compute():
        elements = partial_automorphisms(S, cap=cap)
        return _build_monoid(S, elements, sub_lattice(S), "pa")
    return S.cached(("pa", cap), compute)


def pai_monoid(S, cap=DEFAULT_CAP):
    if not core.is_inverse_semigroup(S):
        raise NotInverse("PAi needs an inverse semigroup")

    def compute():
        elements = partial_automorphisms(S, inverse_only=True, cap=cap)
        M = _build_monoid(S, elements, subi_lattice(S), "pai")
        big = pa_monoid(S, cap=cap)
        assert all(big.index_of(a) is not None for a in elements)
        return M
    return S.cached(("pai", cap), compute)


def submonoid_embedding(small, big):
    """Index map realising PAi(S) inside PA(S)."""
    return tuple(big.index_of(a) for a in small.elements)


# ---------------------------------------------------------------- derived maps

def _pa_witness(phi):
    if isinstance(phi, IsoWitness):
        return phi
    raise TypeError("expected an IsoWitness between PA monoids")


def star_map(phi):
    """The lattice isomorphism H -> H phi* defined by 1_H phi = 1_{H phi*}.

    Also checks that dom(alpha phi) = (dom alpha) phi* and likewise for
    ranges, for every alpha.
    """
    phi = _pa_witness(phi)
    M1, M2 = phi.source, phi.target
    L1, L2 = M1.lattice, M2.lattice
    out = []
    for m in L1.members:
        beta = M2.elements[phi.mapping[M1.identity_map_of(m)]]
        if not beta.is_identity():
            raise IdempotentImageNotIdentityMap(f"1_H for H={members_of(m)} maps to {beta}")
        k = beta.domain_mask
        if k not in L2.index:
            raise IdempotentImageNotIdentityMap(f"{members_of(k)} is not a member of the target lattice")
        out.append(L2.index[k])
    star = LatticeIso(L1, L2, tuple(out))
    for i, a in enumerate(M1.elements):
        b = M2.elements[phi.mapping[i]]
        assert star(a.domain_mask) == b.domain_mask, "dom(a phi) != (dom a) phi*"
        assert star(a.range_mask) == b.range_mask, "ran(a phi) != (ran a) phi*"
    return star


def phi_e(phi, star=None):
    """Idempotent bijection: {e} phi* = {e phi_E}."""
    phi = _pa_witness(phi)
    star = star or star_map(phi)
    S, T = phi.source.semigroup, phi.target.semigroup
    img = [UNDEFINED] * S.order
    for e in core.idempotents(S):
        ys = members_of(star(1 << e))
        assert len(ys) == 1 and ys[0] in core.idempotents(T)
        img[e] = ys[0]
    return PartialBijection(tuple(img), T.order)


CASE_IDEMPOTENT = "idempotent"
CASE_A = "a"   # both indices > 1
CASE_B = "b"   # {<x>, <x phi>} = {C2, N2}
CASE_C = "c"   # both C2


def _mono_type(S, x):
    seq, m, k = core.powers(S, x)
    if m == 1 and len(seq) == 1:
        return "C1"
    if m == 1 and len(seq) == 2:
        return "C2"
    if m == 2 and len(seq) == 2:
        return "N2"
    return "other"


@dataclass(frozen=True)
class AssociatedBijection:
    """The bijection M_S -> M_T attached to a PA-isomorphism, with case tags."""
    map: PartialBijection
    cases: dict


def phi_assoc(phi, star=None):
    """x -> the unique y in M_T with <x> phi* = <y>."""
    phi = _pa_witness(phi)
    star = star or star_map(phi)
    S, T = phi.source.semigroup, phi.target.semigroup
    MT = core.M_set(T)
    img = [UNDEFINED] * S.order
    cases = {}
    for x in sorted(core.M_set(S)):
        K = frozenset(members_of(star(core.mask_of(core.monogenic(S, x)))))
        gens = [y for y in sorted(K) if core.monogenic(T, y) == K]
        if len(gens) != 1:
            raise NonUniqueGenerator(f"<{x}> phi* = {sorted(K)} has generators {gens}")
        y = gens[0]
        if y not in MT:
            raise NonUniqueGenerator(f"image {y} of {x} is not in M_T")
        img[x] = y
        ix = core.powers(S, x)[1]
        iy = core.powers(T, y)[1]
        tx, ty = _mono_type(S, x), _mono_type(T, y)
        tags = []
        if tx == "C1":
            tags.append(CASE_IDEMPOTENT)
            assert ty == "C1"
        if ix > 1 and iy > 1:
            tags.append(CASE_A)
        if {tx, ty} == {"C2", "N2"}:
            tags.append(CASE_B)
        if tx == ty == "C2":
            tags.append(CASE_C)
        assert len(tags) == 1, f"element {x}: cases {tags}"
        cases[x] = tags[0]
    out = PartialBijection(tuple(img), T.order)
    assert out.range == MT
    pe = phi_e(phi, star)
    assert all(img[e] == pe.image[e] for e in core.idempotents(S))
    return AssociatedBijection(out, cases)


@dataclass(frozen=True)
class InducedResult:
    """Outcome of :func:`induces`: a witness, or the first map that fails to transport."""
    witness: object
    counterexample: object = None
    side: str = None

    def __bool__(self):
        return self.witness is not None


def induces(theta, M1, M2):
    """Does the total bijection theta: S -> T induce a PA-isomorphism PA(S) -> PA(T)?"""
    S, T = M1.semigroup, M2.semigroup
    if S.order != T.order or not theta.is_total():
        raise ValueError("theta must be a total bijection between equal-size carriers")
    mapping = []
    for a in M1.elements:
        b = transport(theta, a)
        j = M2.index_of(b)
        if j is None:
            return InducedResult(None, a, "source")
        mapping.append(j)
    if len(M2) != len(M1):
        back = theta.inverse()
        for b in M2.elements:
            if M1.index_of(transport(back, b)) is None:
                return InducedResult(None, b, "target")
    w = IsoWitness(PA_ISO, tuple(mapping), M1, M2)
    assert w.verify()
    return InducedResult(w)


def induced_by(phi, theta):
    """True if theta induces the given PA-isomorphism phi."""
    M1, M2 = phi.source, phi.target
    for i, a in enumerate(M1.elements):
        if transport(theta, a) != M2.elements[phi.mapping[i]]:
            return False
    return True


def identity_pa_iso(M):
    return IsoWitness(PA_ISO, tuple(range(len(M))), M, M)


def pa_iso_from_isomorphism(theta, S, T, cap=DEFAULT_CAP):
    """The PA-isomorphism induced by an isomorphism or anti-isomorphism theta."""
    res = induces(theta, pa_monoid(S, cap), pa_monoid(T, cap))
    if not res:
        raise ValueError("theta does not induce a PA-isomorphism")
    return res.witness


# ---------------------------------------------------------------- C2 x P versus P^<1>

def lemma33_phi(psi, P, Q, cap=DEFAULT_CAP):
    """Build PA(C2 x P) -> PA(Q^<1>) from a PA-isomorphism psi: PA(P) -> PA(Q).

    A map alpha that stays inside P goes to alpha psi; otherwise it goes to
    (alpha restricted to P) psi together with the fixed point z.  The result
    is checked to be a monoid isomorphism over the full tables.
    Returns (phi, G, S) with G = C2 x P and S = Q^<1>.
    """
    from .construct import cyclic_group, direct_product, inflate_at_identity
    if P.order % 2 == 0 or Q.order % 2 == 0:
        raise EvenOrder("both groups must have odd order")
    MP, MQ = psi.source, psi.target
    G = direct_product(cyclic_group(2), P)
    S = inflate_at_identity(Q)
    MG, MS = pa_monoid(G, cap), pa_monoid(S, cap)
    p, q = P.order, Q.order
    z = q
    mapping = []
    for alpha in MG.elements:
        local = [UNDEFINED] * p
        outside = False
        for x, y in alpha.pairs():
            if x < p:
                if y >= p:
                    raise RestrictionNotPA(f"{alpha} sends {x} in P outside P")
                local[x] = y
            else:
                outside = True
        a_p = PartialBijection(tuple(local), p)
        i = MP.index_of(a_p)
        if i is None:
            raise RestrictionNotPA(f"restriction of {alpha} to P is not a partial automorphism")
        beta = MQ.elements[psi.mapping[i]]
        img = list(beta.image) + [UNDEFINED]
        if outside:
            img[z] = z
        j = MS.index_of(PartialBijection(tuple(img), q + 1))
        assert j is not None, "constructed map is not a partial automorphism of Q^<1>"
        mapping.append(j)
    phi = IsoWitness(PA_ISO, tuple(mapping), MG, MS)
    if not phi.verify():
        raise AssertionError("the constructed map is not a monoid isomorphism")
    return phi, G, S


# ---------------------------------------------------------------- restriction

def _empty_monoid():
    return FiniteMonoid([[0]], 0, 0, [PartialBijection((), 0)], None, None, "pa")


def restrict_pa_iso(phi, H, star=None):
    """The restriction of phi to PA(H) as a PA-isomorphism PA(H) -> PA(H phi*)."""
    phi = _pa_witness(phi)
    star = star or star_map(phi)
    M1, M2 = phi.source, phi.target
    S, T = M1.semigroup, M2.semigroup
    hmask = core.mask_of(H)
    kmask = star(hmask)
    h_elems, k_elems = members_of(hmask), members_of(kmask)
    if not h_elems:
        E = _empty_monoid()
        return IsoWitness(PA_ISO, (0,), E, _empty_monoid())
    Hs, _ = S.subsemigroup(h_elems)
    Ks, _ = T.subsemigroup(k_elems)
    MH, MK = pa_monoid(Hs), pa_monoid(Ks)
    hpos = {x: i for i, x in enumerate(k_elems)}
    mapping = []
    for beta in MH.elements:
        img = [UNDEFINED] * S.order
        for i, j in beta.pairs():
            img[h_elems[i]] = h_elems[j]
        a = M1.index_of(PartialBijection(tuple(img), S.order))
        assert a is not None
        gamma = M2.elements[phi.mapping[a]]
        local = [UNDEFINED] * len(k_elems)
        for x, y in gamma.pairs():
            local[hpos[x]] = hpos[y]
        j = MK.index_of(PartialBijection(tuple(local), len(k_elems)))
        assert j is not None
        mapping.append(j)
    w = IsoWitness(PA_ISO, tuple(mapping), MH, MK)
    assert w.verify()
    return w


def restrict_to_pai(phi):
    """Restriction of a PA-isomorphism between inverse semigroups to PAi (as a PAi-isomorphism)."""
    phi = _pa_witness(phi)
    M1, M2 = phi.source, phi.target
    S, T = M1.semigroup, M2.semigroup
    A1, A2 = pai_monoid(S), pai_monoid(T)
    mapping = []
    for a in A1.elements:
        b = M2.elements[phi.mapping[M1.index_of(a)]]
        j = A2.index_of(b)
        if j is None:
            raise AssertionError(f"{a} lands outside PAi(T)")
        mapping.append(j)
    w = IsoWitness(PA_ISO, tuple(mapping), A1, A2)
    assert w.verify()
    return w


def pa_size_estimate(S, inverse_only=False):
    L = subi_lattice(S) if inverse_only else sub_lattice(S)
    return sum(len(a) * len(e) ** 2 for a, e in _iso_classes(S, L.members))


__all__ = [
    "FiniteMonoid", "partial_automorphisms", "pa_monoid", "pai_monoid", "star_map",
    "phi_e", "phi_assoc", "induces", "induced_by", "lemma33_phi", "restrict_pa_iso",
    "restrict_to_pai", "transport", "PartialBijection", "popcount",
]
