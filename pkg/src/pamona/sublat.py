"""Lattices of subsemigroups and inverse subsemigroups, and maps between them."""
from dataclasses import dataclass
from itertools import combinations

from . import core
from .core import members_of, popcount
from .errors import (AmbiguousCandidate, AtomImageNotSingletonIdempotent,
                     NoCandidate, NotASemilattice, NotInverse)
from .partial import PartialBijection
from .search import isomorphisms as _table_isos
from .search import refine_signatures

PLAIN = "sub"
INVERSE = "subi"


def member_key(mask):
    return (popcount(mask), tuple(members_of(mask)))


class SubLattice:
    """Closed subsets of a semigroup, ordered by inclusion.

    Members are bitmasks in canonical order (size, then sorted elements),
    so ``members[0]`` is the empty set and ``members[-1]`` the carrier.
    """

    def __init__(self, universe, members, kind=PLAIN):
        self.universe = universe
        self.kind = kind
        self.members = tuple(sorted(set(members), key=member_key))
        self.index = {m: i for i, m in enumerate(self.members)}
        self._meet = None
        self._sigs = None

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, mask):
        return mask in self.index

    def sets(self):
        return [frozenset(members_of(m)) for m in self.members]

    @property
    def bottom(self):
        return 0

    @property
    def top(self):
        return len(self.members) - 1

    def meet(self, i, j):
        return self.index[self.members[i] & self.members[j]]

    def join(self, i, j):
        u = self.members[i] | self.members[j]
        if self.kind == INVERSE:
            c = core.mask_of(core.inverse_closure(self.universe, members_of(u)))
        else:
            c = core.closure_mask(self.universe, u)
        return self.index[c]

    def leq(self, i, j):
        return self.members[i] & ~self.members[j] == 0

    def meet_table(self):
        if self._meet is None:
            ms = self.members
            idx = self.index
            self._meet = tuple(tuple(idx[a & b] for b in ms) for a in ms)
        return self._meet

    def covers(self):
        """Hasse edges (i, j): member i is covered by member j."""
        ms = self.members
        n = len(ms)
        below = [[j for j in range(n) if j != i and ms[j] & ~ms[i] == 0] for i in range(n)]
        out = []
        for j in range(n):
            for i in below[j]:
                if not any(ms[i] & ~ms[k] == 0 and k != i for k in below[j]):
                    out.append((i, j))
        return sorted(out)

    def signatures(self):
        """Order-theoretic invariants per member (height, depth, covers, atoms below)."""
        if self._sigs is None:
            n = len(self.members)
            up = {i: [] for i in range(n)}
            down = {i: [] for i in range(n)}
            for i, j in self.covers():
                up[i].append(j)
                down[j].append(i)
            height = [0] * n
            for i in range(n):  # canonical order is a linear extension of inclusion
                height[i] = max((height[k] + 1 for k in down[i]), default=0)
            depth = [0] * n
            for i in reversed(range(n)):
                depth[i] = max((depth[k] + 1 for k in up[i]), default=0)
            atoms = set(up[0]) if n else set()
            below_count = [sum(1 for k in range(n) if self.leq(k, i)) for i in range(n)]
            atom_count = [sum(1 for a in atoms if self.leq(a, i)) for i in range(n)]
            base = [(height[i], depth[i], len(up[i]), len(down[i]), atom_count[i], below_count[i])
                    for i in range(n)]
            self._sigs = refine_signatures(self.meet_table(), base)
        return self._sigs

    def __repr__(self):
        return f"SubLattice(kind={self.kind!r}, members={len(self.members)})"


def _bfs_members(S, closure):
    n = S.order
    seeds = sorted({closure(1 << x) for x in range(n)})
    found = {0}
    frontier = []
    for s in seeds:
        if s not in found:
            found.add(s)
            frontier.append(s)
    while frontier:
        nxt = []
        for h in frontier:
            for s in seeds:
                if s & ~h == 0:
                    continue
                j = closure(h | s)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    return found


def sub_members_bruteforce(S, inverse=False):
    """Subset filter over all 2^n subsets; the independent oracle for small orders."""
    n = S.order
    t = S.table
    inv = core.inverse_map(S) if inverse else None
    out = []
    for mask in range(1 << n):
        els = members_of(mask)
        if all((mask >> t[a][b]) & 1 for a in els for b in els) and \
                (inv is None or all((mask >> inv[a]) & 1 for a in els)):
            out.append(mask)
    return out


def sub_lattice(S):
    def compute():
        members = _bfs_members(S, lambda m: core.closure_mask(S, m))
        L = SubLattice(S, members, PLAIN)
        if S.order <= _BRUTE_CHECK_MAX:
            assert set(L.members) == set(sub_members_bruteforce(S))
        return L
    return S.cached("sub_lattice", compute)


def subi_lattice(S):
    if not core.is_inverse_semigroup(S):
        raise NotInverse("Subi needs an inverse semigroup")

    def compute():
        def closure(m):
            return core.mask_of(core.inverse_closure(S, members_of(m)))
        L = SubLattice(S, _bfs_members(S, closure), INVERSE)
        if S.order <= _BRUTE_CHECK_MAX:
            assert set(L.members) == set(sub_members_bruteforce(S, inverse=True))
        return L
    return S.cached("subi_lattice", compute)


# cross-check the closure search against the subset filter up to this order
_BRUTE_CHECK_MAX = 10


def atoms(L):
    """Members covering the empty set; asserted equal to the singleton idempotents."""
    ms = L.members
    minimal = [i for i in range(1, len(ms))
               if not any(j != i and j != 0 and L.leq(j, i) for j in range(1, len(ms)))]
    E = core.idempotents(L.universe)
    expected = sorted(L.index[1 << e] for e in E)
    assert sorted(minimal) == expected
    return [ms[i] for i in minimal]


# ---------------------------------------------------------------- lattice isomorphisms

@dataclass(frozen=True)
class LatticeIso:
    """Member bijection between two SubLattices (by member position)."""
    domain: SubLattice
    codomain: SubLattice
    mapping: tuple

    def __call__(self, mask):
        return self.codomain.members[self.mapping[self.domain.index[mask]]]

    def image_set(self, subset):
        return frozenset(members_of(self(core.mask_of(subset))))

    def inverse(self):
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return LatticeIso(self.codomain, self.domain, tuple(inv))

    def verify(self):
        d, c, f = self.domain, self.codomain, self.mapping
        if sorted(f) != list(range(len(c))):
            return False
        return all(d.leq(i, j) == c.leq(f[i], f[j]) for i in range(len(d)) for j in range(len(d)))


def lattice_isomorphisms(L1, L2, limit=None):
    """Order isomorphisms L1 -> L2, in deterministic order.

    Lattice isomorphisms coincide with isomorphisms of the meet
    semilattices, so the shared table search does the work.
    """
    if len(L1) != len(L2):
        return
    for f in _table_isos(L1.meet_table(), L2.meet_table(), L1.signatures(), L2.signatures(),
                         limit=limit):
        yield LatticeIso(L1, L2, f)


def induced_lattice_iso(theta, L1, L2):
    """The member map H -> H theta for a total bijection theta, or None."""
    img = theta.image
    out = []
    for m in L1.members:
        im = core.mask_of(img[x] for x in members_of(m))
        if im not in L2.index:
            return None
        out.append(L2.index[im])
    if len(set(out)) != len(out) or len(out) != len(L2):
        return None
    return LatticeIso(L1, L2, tuple(out))


def e_bijection(psi):
    """The idempotent bijection read off the atoms: {e} psi = {e psi_E}."""
    S, T = psi.domain.universe, psi.codomain.universe
    ET = core.idempotents(T)
    img = [-1] * S.order
    for e in sorted(core.idempotents(S)):
        m = psi(1 << e)
        ys = members_of(m)
        if len(ys) != 1 or ys[0] not in ET:
            raise AtomImageNotSingletonIdempotent(f"atom {{{e}}} goes to {ys}")
        img[e] = ys[0]
    return PartialBijection(tuple(img), T.order)


def weak_iso_check(psi_e, S, T):
    """Is psi_e a weak isomorphism of E_S onto E_T?

    Comparability must be preserved in both directions, and for every
    incomparable pair the image of the meet is the meet of the images.
    """
    ES, ET = sorted(core.idempotents(S)), core.idempotents(T)
    for X in (S, T):
        if not core.is_idempotent_commutative(X):
            raise NotASemilattice("weak isomorphisms are defined between semilattices of idempotents")
    if set(psi_e.domain) != set(ES) or set(psi_e.range) != set(ET):
        return False
    ts, tt = S.table, T.table
    f = psi_e.image
    for e, g in combinations(ES, 2):
        comp = core.idempotent_leq(S, e, g) or core.idempotent_leq(S, g, e)
        fcomp = core.idempotent_leq(T, f[e], f[g]) or core.idempotent_leq(T, f[g], f[e])
        if comp != fcomp:
            return False
        if not comp and f[ts[e][g]] != tt[f[e]][f[g]]:
            return False
    return True


def base_partial_bijection(psi):
    """The base partial bijection N_S u E_S -> N_T u E_T of a projectivity.

    For a nongroup x the image is the unique nongroup y of T with
    [[x]] psi = [[y]] and (x x^-1) psi_E = y y^-1.
    """
    L1, L2 = psi.domain, psi.codomain
    if L1.kind != INVERSE or L2.kind != INVERSE:
        raise ValueError("base_partial_bijection needs a projectivity (Subi lattices)")
    S, T = L1.universe, L2.universe
    inv_s, inv_t = core.inverse_map(S), core.inverse_map(T)
    psi_e = e_bijection(psi)
    NT = core.N_set(T)
    img = list(psi_e.image)
    ts, tt = S.table, T.table
    for x in sorted(core.N_set(S)):
        target = psi(core.mask_of(core.monogenic_inverse(S, x)))
        want = psi_e.image[ts[x][inv_s[x]]]
        cands = [y for y in sorted(NT) if core.mask_of(core.monogenic_inverse(T, y)) == target
                 and tt[y][inv_t[y]] == want]
        if not cands:
            raise NoCandidate(f"no image for nongroup element {x}")
        if len(cands) > 1:
            raise AmbiguousCandidate(f"element {x} has images {cands}")
        img[x] = cands[0]
    out = PartialBijection(tuple(img), T.order)
    _check_base_properties(psi, out, psi_e)
    return out


def _check_base_properties(psi, base, psi_e):
    S, T = psi.domain.universe, psi.codomain.universe
    dom = sorted(base.domain)
    assert base.domain == core.N_set(S) | core.idempotents(S)
    assert base.range == core.N_set(T) | core.idempotents(T)
    assert all(base.image[e] == psi_e.image[e] for e in core.idempotents(S))
    gs, gt = core.green(S), core.green(T)
    f = base.image
    for x in dom:
        for y in dom:
            assert (gs.r_index[x] == gs.r_index[y]) == (gt.r_index[f[x]] == gt.r_index[f[y]])
            assert (gs.l_index[x] == gs.l_index[y]) == (gt.l_index[f[x]] == gt.l_index[f[y]])
    for x in dom:
        assert psi(core.mask_of(core.monogenic_inverse(S, x))) == \
            core.mask_of(core.monogenic_inverse(T, f[x]))


def induces_lattice_iso(theta, psi):
    """Does the total map theta: S -> T induce psi, i.e. H psi = H theta for all H?

    ``theta`` may be a PartialBijection or a plain image tuple (for
    homomorphisms that are not injective).
    """
    img = getattr(theta, "image", theta)
    L1 = psi.domain
    return all(psi(m) == core.mask_of(img[x] for x in members_of(m)) for m in L1.members)
