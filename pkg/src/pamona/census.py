"""Small-order census of semigroups up to isomorphism (or iso + anti-iso).

Tables are completed cell by cell in row-major order.  A branch is cut as
soon as some fully defined triple breaks associativity, or some relabelling
(optionally composed with transposition) already beats the partial table
lexicographically, so each class is produced once, by its least table.
"""
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product

from . import core
from .core import Semigroup
from .errors import OrderTooLarge, SizeCapExceeded

MAX_ORDER = 4
MAX_INVERSE_ORDER = 5


@dataclass
class Census:
    order: int
    anti: bool
    inverse_only: bool
    members: list
    annotations: list = field(default_factory=list)

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)


def _relabel_views(n, anti):
    """Per view: (perm, inverse perm, transpose flag)."""
    views = []
    for p in permutations(range(n)):
        inv = [0] * n
        for i, x in enumerate(p):
            inv[x] = i
        for tr in ((False, True) if anti else (False,)):
            if tr or p != tuple(range(n)):
                views.append((p, inv, tr))
    return views


def _beaten(cells, n, views):
    """True if some view of the partial table is lexicographically smaller."""
    for p, inv, tr in views:
        for r in range(n):
            done = False
            for c in range(n):
                i, j = inv[r], inv[c]
                if tr:
                    i, j = j, i
                v = cells[i * n + j]
                w = cells[r * n + c]
                if v < 0 or w < 0:
                    done = True
                    break
                pv = p[v]
                if pv < w:
                    return True
                if pv > w:
                    done = True
                    break
            if done:
                break
    return False


def _assoc_ok(cells, n, i, j):
    """Check every defined triple touching the new cell (i, j)."""
    t = cells
    for x in range(n):
        for y in range(n):
            xy = t[x * n + y]
            if xy < 0:
                continue
            for z in range(n):
                if not (x == i and y == j) and not (xy == i and z == j) and \
                        not (y == i and z == j) and not (x == i and t[y * n + z] == j):
                    continue
                yz = t[y * n + z]
                if yz < 0:
                    continue
                a = t[xy * n + z]
                b = t[x * n + yz]
                if a >= 0 and b >= 0 and a != b:
                    return False
    return True


def canonical_tables(n, anti=False):
    """Least tables of each class, in increasing lexicographic order."""
    if n < 1:
        raise ValueError("order must be positive")
    views = _relabel_views(n, anti)
    cells = [-1] * (n * n)
    out = []

    def rec(k):
        if k == n * n:
            out.append(tuple(tuple(cells[r * n:(r + 1) * n]) for r in range(n)))
            return
        i, j = divmod(k, n)
        for v in range(n):
            cells[k] = v
            if _assoc_ok(cells, n, i, j) and not _beaten(cells, n, views):
                rec(k + 1)
        cells[k] = -1
    rec(0)
    return out


def annotate(S):
    inv = core.is_inverse_semigroup(S)
    return {
        "inverse": inv,
        "combinatorial": core.is_combinatorial(S),
        "group": core.is_group(S),
        "semilattice": core.is_semilattice(S),
        "commutative": core.is_commutative(S),
        "monoid": core.identity_element(S) is not None,
    }


def census(n, anti=False, inverse_only=False):
    if n > MAX_INVERSE_ORDER or (n > MAX_ORDER and not inverse_only):
        raise OrderTooLarge(f"census is limited to order {MAX_ORDER} "
                            f"({MAX_INVERSE_ORDER} for inverse semigroups)")
    members = []
    for t in canonical_tables(n, anti):
        S = Semigroup._trusted(t)
        if inverse_only and not core.is_inverse_semigroup(S):
            continue
        members.append(S)
    return Census(n, anti, inverse_only, members, [annotate(S) for S in members])


def census_upto(n, anti=False, inverse_only=False):
    out = []
    for k in range(1, n + 1):
        out.extend(census(k, anti, inverse_only).members)
    return out


# ---------------------------------------------------------------- oracle

def _min_form(t, n, anti):
    best = None
    tables = [t, tuple(zip(*t))] if anti else [t]
    for u in tables:
        for p in permutations(range(n)):
            inv = [0] * n
            for i, x in enumerate(p):
                inv[x] = i
            cand = tuple(tuple(p[u[inv[r]][inv[c]]] for c in range(n)) for r in range(n))
            if best is None or cand < best:
                best = cand
    return best


def labeled_tables(n):
    """Every associative table on {0..n-1}, by plain search (no symmetry pruning)."""
    if n <= 3:
        out = []
        for flat in product(range(n), repeat=n * n):
            t = tuple(tuple(flat[r * n:(r + 1) * n]) for r in range(n))
            if all(t[t[x][y]][z] == t[x][t[y][z]] for x in range(n) for y in range(n) for z in range(n)):
                out.append(t)
        return out
    cells = [-1] * (n * n)
    out = []

    def ok():
        t = cells
        for x in range(n):
            for y in range(n):
                xy = t[x * n + y]
                if xy < 0:
                    continue
                for z in range(n):
                    yz = t[y * n + z]
                    if yz < 0:
                        continue
                    a, b = t[xy * n + z], t[x * n + yz]
                    if a >= 0 and b >= 0 and a != b:
                        return False
        return True

    def rec(k):
        if k == n * n:
            out.append(tuple(tuple(cells[r * n:(r + 1) * n]) for r in range(n)))
            return
        for v in range(n):
            cells[k] = v
            if ok():
                rec(k + 1)
        cells[k] = -1
    rec(0)
    return out


def oracle_classes(n, anti=False, inverse_only=False):
    """Class representatives by enumerate-all-then-dedupe."""
    reps = sorted({_min_form(t, n, anti) for t in labeled_tables(n)})
    if inverse_only:
        reps = [t for t in reps if core.is_inverse_semigroup(Semigroup._trusted(t))]
    return reps


def verify_against_oracle(n, anti=False):
    got = canonical_tables(n, anti)
    want = oracle_classes(n, anti)
    return got == want


# ---------------------------------------------------------------- PA classes

def _pa_key(S, cap):
    from .pam import pa_monoid
    from .sublat import sub_lattice
    L = sub_lattice(S)
    M = pa_monoid(S, cap)
    return (len(L), len(M), tuple(sorted(map(repr, L.signatures()))))


def _partition_bucket(args):
    tables, cap = args
    from .isotest import pa_isomorphic
    members = [Semigroup._trusted(t) for t in tables]
    classes = []
    for i, S in enumerate(members):
        for cls in classes:
            if pa_isomorphic(members[cls[0]], S, cap, derive=False):
                cls.append(i)
                break
        else:
            classes.append([i])
    return classes


def default_jobs():
    try:
        return max(1, int(os.environ.get("PAMONA_JOBS", "1")))
    except ValueError:
        return 1


@dataclass
class PAPartition:
    classes: list          # lists of member positions
    failed: list           # positions whose PA exceeded the cap
    members: list

    def class_of(self, i):
        for c in self.classes:
            if i in c:
                return c
        return None


def pa_classes(members, cap=20000, jobs=None):
    """Partition semigroups into PA-isomorphism classes."""
    if isinstance(members, Census):
        members = members.members
    members = list(members)
    jobs = jobs or default_jobs()
    buckets = {}
    failed = []
    for i, S in enumerate(members):
        try:
            key = _pa_key(S, cap)
        except SizeCapExceeded:
            failed.append(i)
            continue
        buckets.setdefault(key, []).append(i)
    keys = sorted(buckets, key=lambda k: buckets[k][0])
    work = [([members[i].table for i in buckets[k]], cap) for k in keys]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            parts = list(ex.map(_partition_bucket, work))
    else:
        parts = [_partition_bucket(w) for w in work]
    classes = []
    for k, part in zip(keys, parts):
        idx = buckets[k]
        classes.extend([idx[j] for j in c] for c in part)
    classes.sort()
    return PAPartition(classes, failed, members)
