"""Finite semigroups given by Cayley tables, and their per-element structure.

Elements are the dense indices ``0..n-1``; labels only matter for display
and for the text interchange format.  Subsets are passed around either as
Python sets or as integer bitmasks (bit ``i`` set means element ``i``).
"""
from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import NotAssociative, NotInverse, OutOfRange
from .partial import PartialBijection


def first_associativity_failure(arr, chunk=None):
    """Return the first failing triple in row-major order, or None.

    ``arr`` is an ``n x n`` integer array.  The check runs in slabs of the
    first index so memory stays at ``chunk * n * n``.
    """
    n = arr.shape[0]
    if n == 0:
        return None
    if chunk is None:
        chunk = max(1, 2_000_000 // (n * n))
    for start in range(0, n, chunk):
        rows = np.arange(start, min(n, start + chunk))
        lhs = arr[arr[rows]]                    # (ij)k
        rhs = arr[rows[:, None, None], arr[None, :, :]]  # i(jk)
        bad = np.argwhere(lhs != rhs)
        if len(bad):
            i, j, k = bad[0]
            return int(rows[i]), int(j), int(k)
    return None


class Semigroup:
    """A validated finite semigroup.  Immutable once built."""

    __slots__ = ("table", "labels", "_array", "_cache")

    def __init__(self, table, labels=None):
        rows = [list(r) for r in table]
        n = len(rows)
        if n == 0:
            raise ValueError("a semigroup needs at least one element")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, (int, np.integer)) or not 0 <= v < n:
                    raise OutOfRange(i, j, v)
        arr = np.array(rows, dtype=np.int64)
        bad = first_associativity_failure(arr)
        if bad is not None:
            raise NotAssociative(*bad)
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != n:
                raise ValueError(f"{len(labels)} labels for {n} elements")
            if len(set(labels)) != n:
                raise ValueError("labels must be distinct")
        arr.setflags(write=False)
        self.table = tuple(tuple(int(v) for v in r) for r in rows)
        self.labels = labels
        self._array = arr
        self._cache = {}

    @classmethod
    def _trusted(cls, table, labels=None):
        # Skip the associativity scan; only for tables that are associative by construction.
        obj = cls.__new__(cls)
        obj.table = tuple(tuple(int(v) for v in r) for r in table)
        obj.labels = None if labels is None else tuple(str(x) for x in labels)
        arr = np.array(obj.table, dtype=np.int64)
        arr.setflags(write=False)
        obj._array = arr
        obj._cache = {}
        return obj

    @property
    def order(self):
        return len(self.table)

    def __len__(self):
        return len(self.table)

    @property
    def array(self):
        return self._array

    def mul(self, a, b):
        return self.table[a][b]

    def product(self, *xs):
        it = iter(xs)
        acc = next(it)
        for x in it:
            acc = self.table[acc][x]
        return acc

    def label(self, i):
        return self.labels[i] if self.labels is not None else str(i)

    def index_of(self, label):
        if self.labels is None:
            return int(label)
        return self.labels.index(str(label))

    def with_labels(self, labels):
        return Semigroup._trusted(self.table, labels)

    def relabel(self, perm, labels=None):
        """Isomorphic copy in which old element ``i`` becomes ``perm[i]``."""
        n = self.order
        inv = [0] * n
        for i, p in enumerate(perm):
            inv[p] = i
        t = self.table
        new = [[perm[t[inv[a]][inv[b]]] for b in range(n)] for a in range(n)]
        if labels is None and self.labels is not None:
            labels = [self.labels[inv[a]] for a in range(n)]
        return Semigroup._trusted(new, labels)

    def subsemigroup(self, subset, labels=None):
        """The closed subset as a semigroup in its own right, plus the index map."""
        elems = sorted(subset)
        pos = {x: i for i, x in enumerate(elems)}
        t = self.table
        sub = [[pos[t[a][b]] for b in elems] for a in elems]
        if labels is None and self.labels is not None:
            labels = [self.labels[x] for x in elems]
        return Semigroup._trusted(sub, labels), tuple(elems)

    def __eq__(self, other):
        return isinstance(other, Semigroup) and self.table == other.table and self.labels == other.labels

    def __hash__(self):
        return hash((self.table, self.labels))

    def __repr__(self):
        return f"Semigroup(order={self.order})"

    def cached(self, key, fn):
        try:
            return self._cache[key]
        except KeyError:
            val = self._cache[key] = fn()
            return val


def validate(table, labels=None):
    return Semigroup(table, labels)


def trivial_semigroup():
    return Semigroup([[0]])


# ---------------------------------------------------------------- bitsets

def mask_of(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


def members_of(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


# ---------------------------------------------------------------- elements

def idempotents(S):
    return S.cached("idempotents", lambda: frozenset(x for x in range(S.order) if S.table[x][x] == x))


def is_idempotent(S, x):
    return S.table[x][x] == x


def inverses_of(S, x):
    t = S.table
    return frozenset(y for y in range(S.order) if t[t[x][y]][x] == x and t[t[y][x]][y] == y)


def regular_elements(S):
    def compute():
        a = S.array
        xs = np.arange(S.order)
        # xyx for every (x, y)
        xyx = a[a[xs[:, None], xs[None, :]], xs[:, None]]
        return frozenset(int(x) for x in np.flatnonzero((xyx == xs[:, None]).any(axis=1)))
    return S.cached("regular", compute)


def is_regular(S):
    return len(regular_elements(S)) == S.order


def is_idempotent_commutative(S):
    E = sorted(idempotents(S))
    t = S.table
    return bool(E) and all(t[e][f] == t[f][e] for e in E for f in E)


def inverse_map(S):
    """Tuple ``inv`` with ``inv[x]`` the unique inverse of x.  Requires an inverse semigroup."""
    if not is_inverse_semigroup(S):
        raise NotInverse("semigroup is not inverse")

    def compute():
        out = []
        for x in range(S.order):
            (y,) = inverses_of(S, x)
            out.append(y)
        return tuple(out)
    return S.cached("inverse_map", compute)


def powers(S, x):
    """Distinct powers x, x^2, ... in order of appearance, plus (index, period)."""
    seen = {}
    seq = []
    p = x
    k = 1
    while p not in seen:
        seen[p] = k
        seq.append(p)
        p = S.table[p][x]
        k += 1
    m = seen[p]
    return seq, m, k - m


@dataclass(frozen=True)
class ElementProfile:
    element: int
    order: int
    index: int
    period: int
    idempotent: bool
    regular: bool
    inverses: frozenset


def element_profile(S, x):
    seq, m, k = powers(S, x)
    prof = ElementProfile(x, len(seq), m, k, S.table[x][x] == x,
                          x in regular_elements(S), inverses_of(S, x))
    assert prof.order == prof.index + prof.period - 1
    return prof


def monogenic(S, x):
    return frozenset(powers(S, x)[0])


def subsemigroup_closure(S, subset):
    """Least closed superset of ``subset`` (the empty set is closed)."""
    t = S.table
    elems = list(dict.fromkeys(subset))
    have = set(elems)
    i = 0
    while i < len(elems):
        a = elems[i]
        for j in range(i + 1):
            b = elems[j]
            for p in (t[a][b], t[b][a]):
                if p not in have:
                    have.add(p)
                    elems.append(p)
        i += 1
    return frozenset(have)


def closure_mask(S, mask):
    return mask_of(subsemigroup_closure(S, members_of(mask)))


def is_closed(S, subset):
    t = S.table
    s = set(subset)
    return all(t[a][b] in s for a in s for b in s)


def monogenic_inverse(S, x):
    inv = inverse_map(S)
    return subsemigroup_closure(S, {x, inv[x]})


def inverse_closure(S, subset):
    inv = inverse_map(S)
    s = set(subset)
    return subsemigroup_closure(S, s | {inv[x] for x in s})


def opposite(S):
    n = S.order
    t = S.table
    return Semigroup._trusted([[t[b][a] for b in range(n)] for a in range(n)], S.labels)


def natural_involution(S):
    inv = inverse_map(S)
    return PartialBijection(tuple(inv), S.order)


# ---------------------------------------------------------------- green

def _partition(keys):
    groups = {}
    for x, k in enumerate(keys):
        groups.setdefault(k, []).append(x)
    classes = sorted((tuple(v) for v in groups.values()), key=lambda c: c[0])
    idx = [0] * len(keys)
    for ci, c in enumerate(classes):
        for x in c:
            idx[x] = ci
    return tuple(frozenset(c) for c in classes), tuple(idx)


@dataclass(frozen=True)
class GreenData:
    """The five Green partitions and the principal-ideal orders.

    ``*_classes`` are tuples of frozensets ordered by least element and
    ``*_index[x]`` is the class number of ``x``.  ``j_order``, ``l_order``
    and ``r_order`` hold pairs ``(a, b)`` of class numbers with the ideal of
    class ``a`` contained in the ideal of class ``b``.
    """
    h_classes: tuple
    l_classes: tuple
    r_classes: tuple
    d_classes: tuple
    j_classes: tuple
    h_index: tuple
    l_index: tuple
    r_index: tuple
    d_index: tuple
    j_index: tuple
    j_order: frozenset
    l_order: frozenset
    r_order: frozenset

    def H(self, x):
        return self.h_classes[self.h_index[x]]

    def L(self, x):
        return self.l_classes[self.l_index[x]]

    def R(self, x):
        return self.r_classes[self.r_index[x]]

    def D(self, x):
        return self.d_classes[self.d_index[x]]

    def J(self, x):
        return self.j_classes[self.j_index[x]]


def principal_ideals(S):
    """Bitmasks (right, left, two-sided) of S^1 x, x S^1, S^1 x S^1 for every x."""
    def compute():
        n = S.order
        t = S.table
        right = [mask_of(t[x]) | (1 << x) for x in range(n)]
        left = [mask_of(t[y][x] for y in range(n)) | (1 << x) for x in range(n)]
        two = []
        for x in range(n):
            m = 0
            for y in members_of(left[x]):
                m |= right[y]
            two.append(m)
        return tuple(right), tuple(left), tuple(two)
    return S.cached("ideals", compute)


def _order_pairs(classes, ideal):
    reps = [min(c) for c in classes]
    return frozenset((a, b) for a, ra in enumerate(reps) for b, rb in enumerate(reps)
                     if ideal[ra] & ~ideal[rb] == 0)


def green(S):
    def compute():
        n = S.order
        right, left, two = principal_ideals(S)
        r_classes, r_index = _partition(right)
        l_classes, l_index = _partition(left)
        j_classes, j_index = _partition(two)
        h_classes, h_index = _partition(list(zip(l_index, r_index)))
        # D as the join of L and R: union-find over both partitions.
        parent = list(range(n))

        def find(a):
            while parent[a] != a:
                parent[a] = parent[parent[a]]
                a = parent[a]
            return a
        for classes in (l_classes, r_classes):
            for c in classes:
                it = iter(c)
                root = find(next(it))
                for x in it:
                    rx = find(x)
                    if rx != root:
                        parent[rx] = root
        d_classes, d_index = _partition([find(x) for x in range(n)])
        if set(d_classes) != set(j_classes):
            raise AssertionError("D != J on a finite semigroup")
        return GreenData(h_classes, l_classes, r_classes, d_classes, j_classes,
                         h_index, l_index, r_index, d_index, j_index,
                         _order_pairs(j_classes, two), _order_pairs(l_classes, left),
                         _order_pairs(r_classes, right))
    return S.cached("green", compute)


def is_inverse_semigroup(S):
    def compute():
        direct = is_regular(S) and is_idempotent_commutative(S)
        E = idempotents(S)
        g = green(S)
        by_classes = all(len(E & c) == 1 for c in g.l_classes) and \
            all(len(E & c) == 1 for c in g.r_classes)
        if direct != by_classes:
            raise AssertionError("the two inverse-semigroup criteria disagree")
        return direct
    return S.cached("is_inverse", compute)


# ---------------------------------------------------------------- natural order

class NaturalOrder:
    """x <= y iff x = x x^-1 y, on an inverse semigroup."""

    def __init__(self, S):
        if not is_inverse_semigroup(S):
            raise NotInverse("the natural order needs an inverse semigroup")
        inv = inverse_map(S)
        t = S.table
        n = S.order
        rel = np.zeros((n, n), dtype=bool)
        for x, y in product(range(n), repeat=2):
            rel[x, y] = x == t[t[x][inv[x]]][y]
        rel.setflags(write=False)
        self.semigroup = S
        self.matrix = rel

    def leq(self, x, y):
        return bool(self.matrix[x, y])

    def lt(self, x, y):
        return x != y and bool(self.matrix[x, y])

    def pairs(self):
        return frozenset((int(a), int(b)) for a, b in np.argwhere(self.matrix))

    def covers(self):
        """Hasse edges (x, y) with x < y and nothing strictly between."""
        m = self.matrix
        n = m.shape[0]
        out = []
        for x in range(n):
            for y in range(n):
                if x != y and m[x, y] and not any(z not in (x, y) and m[x, z] and m[z, y] for z in range(n)):
                    out.append((x, y))
        return out


def natural_order(S):
    return S.cached("natural_order", lambda: NaturalOrder(S))


def idempotent_leq(S, e, f):
    """e <= f in the standard order on idempotents: e = ef = fe."""
    t = S.table
    return t[e][f] == e and t[f][e] == e


# ---------------------------------------------------------------- special sets

def M_set(S):
    """Elements whose monogenic subsemigroup has exactly one generator."""
    def compute():
        direct = set()
        for x in range(S.order):
            gen = monogenic(S, x)
            if sum(1 for y in gen if monogenic(S, y) == gen) == 1:
                direct.add(x)
        by_index = set()
        for x in range(S.order):
            seq, m, k = powers(S, x)
            if (m == 1 and len(seq) <= 2) or m > 1:
                by_index.add(x)
        if direct != by_index:
            raise AssertionError("M_S criteria disagree")
        return frozenset(direct)
    return S.cached("M_set", compute)


def group_elements(S):
    g = green(S)
    out = set()
    for e in idempotents(S):
        out |= g.H(e)
    return frozenset(out)


def N_set(S):
    def compute():
        ns = frozenset(range(S.order)) - group_elements(S)
        assert ns | idempotents(S) <= M_set(S)
        return ns
    return S.cached("N_set", compute)


# ---------------------------------------------------------------- predicates

def is_commutative(S):
    a = S.array
    return bool((a == a.T).all())


def is_combinatorial(S):
    return all(len(c) == 1 for c in green(S).h_classes)


def identity_element(S):
    t = S.table
    n = S.order
    for e in range(n):
        if all(t[e][x] == x and t[x][e] == x for x in range(n)):
            return e
    return None


def zero_element(S):
    t = S.table
    n = S.order
    for z in range(n):
        if all(t[z][x] == z and t[x][z] == z for x in range(n)):
            return z
    return None


def is_group(S):
    e = identity_element(S)
    if e is None:
        return False
    t = S.table
    return all(any(t[x][y] == e == t[y][x] for y in range(S.order)) for x in range(S.order))


def is_semilattice(S):
    return len(idempotents(S)) == S.order and is_commutative(S)


def is_chain(S, subset=None):
    """Idempotents in ``subset`` (default all of E_S) are pairwise comparable."""
    E = sorted(idempotents(S) if subset is None else subset)
    return all(idempotent_leq(S, e, f) or idempotent_leq(S, f, e) for e in E for f in E)


def is_band(S):
    return len(idempotents(S)) == S.order
