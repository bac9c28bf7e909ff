"""Backtracking isomorphism search between two multiplication tables.

The search fixes images for a generating set of the source table, chosen
greedily with the rarest invariant class first, and propagates every
assignment through the products of already mapped elements.  Any
conflict (two images for one element, two preimages for one image, or a
signature mismatch) cuts the branch.  Because the chosen generators
generate the whole source, a branch that survives all generators is a
complete isomorphism; the enumeration is therefore exhaustive.
"""
from collections import Counter

import numpy as np


def table_signatures(table):
    """Per-element invariants of an abstract multiplication table.

    Every entry is preserved by isomorphisms, so equal tables up to
    relabelling have equal signature multisets.
    """
    a = np.asarray(table, dtype=np.int64)
    n = a.shape[0]
    xs = np.arange(n)
    diag = a[xs, xs]
    idem = diag == xs
    left_fix = (a == xs[None, :]).sum(axis=1)     # #{y : xy = y}
    right_fix = (a == xs[:, None]).sum(axis=0)    # #{y : yx = y}
    row_img = np.array([len(set(r)) for r in a.tolist()])
    col_img = np.array([len(set(c)) for c in a.T.tolist()])
    commuting = (a == a.T).sum(axis=1)
    idem_idx = np.flatnonzero(idem)
    # number of idempotents acting as left / right identities on x
    left_units = (a[idem_idx, :] == xs[None, :]).sum(axis=0) if len(idem_idx) else np.zeros(n, int)
    right_units = (a[:, idem_idx] == xs[:, None]).sum(axis=1) if len(idem_idx) else np.zeros(n, int)
    sigs = []
    tl = a.tolist()
    for x in range(n):
        seen = {}
        p = x
        k = 1
        while p not in seen:
            seen[p] = k
            p = tl[p][x]
            k += 1
        m = seen[p]
        sigs.append((bool(idem[x]), m, k - m, int(left_fix[x]), int(right_fix[x]),
                     int(row_img[x]), int(col_img[x]), int(commuting[x]),
                     int(left_units[x]), int(right_units[x])))
    return sigs


def refine_signatures(table, sigs, rounds=2):
    """Colour refinement: fold in the multiset of (sig of x*y, sig of y*x, sig of y)."""
    t = [list(r) for r in table]
    n = len(t)
    cur = list(sigs)
    for _ in range(rounds):
        ids = {s: i for i, s in enumerate(sorted(set(cur), key=repr))}
        c = [ids[s] for s in cur]
        nxt = []
        for x in range(n):
            row = t[x]
            bag = Counter((c[y], c[row[y]], c[t[y][x]]) for y in range(n))
            nxt.append((cur[x], tuple(sorted(bag.items()))))
        if len(set(nxt)) == len(set(cur)):
            break
        cur = nxt
    return cur


def choose_generators(table, sigs, seed=()):
    """Greedy generating set, rarest signature class first."""
    n = len(table)
    counts = Counter(sigs)
    order = sorted(range(n), key=lambda x: (counts[sigs[x]], x))
    have = set(seed)
    elems = list(have)
    gens = []
    for g in order:
        if g in have:
            continue
        gens.append(g)
        have.add(g)
        elems.append(g)
        i = 0
        while i < len(elems):
            a = elems[i]
            for j in range(i + 1):
                b = elems[j]
                for p in (table[a][b], table[b][a]):
                    if p not in have:
                        have.add(p)
                        elems.append(p)
            i += 1
        if len(have) == n:
            break
    return gens


def isomorphisms(t1, t2, sig1=None, sig2=None, fixed=(), limit=None):
    """Yield every isomorphism ``t1 -> t2`` as a tuple of images.

    ``fixed`` is a sequence of forced pairs (source, target).  Signatures
    default to :func:`table_signatures` refined once.
    """
    n = len(t1)
    if n != len(t2):
        return
    if n == 0:
        yield ()
        return
    if sig1 is None:
        sig1 = refine_signatures(t1, table_signatures(t1))
    if sig2 is None:
        sig2 = refine_signatures(t2, table_signatures(t2))
    if Counter(sig1) != Counter(sig2):
        return
    t1 = [list(r) for r in t1]
    t2 = [list(r) for r in t2]
    fwd = [-1] * n
    bwd = [-1] * n
    mapped = []
    state = {"done": 0}
    by_sig = {}
    for h in range(n):
        by_sig.setdefault(sig2[h], []).append(h)

    def assign(x, y):
        if fwd[x] != -1:
            return fwd[x] == y
        if bwd[y] != -1 or sig1[x] != sig2[y]:
            return False
        fwd[x] = y
        bwd[y] = x
        mapped.append(x)
        return True

    def propagate():
        # Each newly mapped element meets every element mapped before it.
        i = state["done"]
        while i < len(mapped):
            x = mapped[i]
            fx = fwd[x]
            rx = t1[x]
            rfx = t2[fx]
            for j in range(i + 1):
                y = mapped[j]
                fy = fwd[y]
                if not assign(rx[y], rfx[fy]):
                    return False
                if not assign(t1[y][x], t2[fy][fx]):
                    return False
            i += 1
        state["done"] = i
        return True

    def undo(mark, done):
        while len(mapped) > mark:
            x = mapped.pop()
            bwd[fwd[x]] = -1
            fwd[x] = -1
        state["done"] = done

    for x, y in fixed:
        if not assign(x, y):
            return
    if not propagate():
        return
    gens = choose_generators(t1, sig1, seed=[x for x, _ in fixed])
    found = 0

    def rec(k):
        nonlocal found
        if k == len(gens):
            if len(mapped) == n:
                found += 1
                yield tuple(fwd)
            return
        g = gens[k]
        if fwd[g] != -1:
            yield from rec(k + 1)
            return
        for h in by_sig.get(sig1[g], ()):
            if bwd[h] != -1:
                continue
            mark, done = len(mapped), state["done"]
            if assign(g, h) and propagate():
                yield from rec(k + 1)
                if limit is not None and found >= limit:
                    return
            undo(mark, done)

    yield from rec(0)


def is_isomorphism(t1, t2, f):
    n = len(t1)
    if len(t2) != n or sorted(f) != list(range(n)):
        return False
    return all(f[t1[a][b]] == t2[f[a]][f[b]] for a in range(n) for b in range(n))


def is_anti_isomorphism(t1, t2, f):
    n = len(t1)
    if len(t2) != n or sorted(f) != list(range(n)):
        return False
    return all(f[t1[a][b]] == t2[f[b]][f[a]] for a in range(n) for b in range(n))
