"""Structural predicates: isolated subgroups, C2 x odd splittings, short bypasses.

For finite groups, "periodic with no involutions" is the same as "odd
order" (Cauchy), and that is the form used throughout this module.
"""
from collections import deque
from dataclasses import dataclass, field

import numpy as np

from . import core
from .errors import NotAGroup, NotInverse


def _need_inverse(S):
    if not core.is_inverse_semigroup(S):
        raise NotInverse("this predicate is defined for inverse semigroups")


def isolated_idempotents(S):
    g = core.green(S)
    return frozenset(e for e in core.idempotents(S) if g.D(e) == g.H(e))


def maximal_subgroup(S, e):
    """H_e as (Semigroup, elements)."""
    return S.subsemigroup(sorted(core.green(S).H(e)))


def isolated_subgroups(S):
    """Maximal isolated subgroups, keyed by their idempotent."""
    return {e: maximal_subgroup(S, e) for e in sorted(isolated_idempotents(S))}


# ---------------------------------------------------------------- C2 x odd

@dataclass(frozen=True)
class Decomposition:
    A: frozenset
    P: frozenset
    transcript: tuple = ()


def element_order(G, x):
    seq, m, k = core.powers(G, x)
    return len(seq)


def c2_times_odd(G):
    """Split G as {e, a} x P with P of odd order, when a is the unique involution."""
    if not core.is_group(G):
        raise NotAGroup("c2_times_odd needs a group")
    e = core.identity_element(G)
    t = G.table
    invol = [x for x in range(G.order) if x != e and t[x][x] == e]
    if len(invol) != 1:
        return None
    a = invol[0]
    P = frozenset(x for x in range(G.order) if element_order(G, x) % 2 == 1)
    if 2 * len(P) != G.order or not core.is_closed(G, P):
        return None
    A = frozenset({e, a})
    notes = [f"unique involution {G.label(a)}", f"odd part has order {len(P)}"]
    assert A & P == {e}
    factors = {}
    for x in A:
        for p in P:
            assert t[x][p] == t[p][x]
            factors.setdefault(t[x][p], []).append((x, p))
    assert len(factors) == G.order and all(len(v) == 1 for v in factors.values())
    notes.append("A and P commute elementwise and factor G uniquely")
    return Decomposition(A, P, tuple(notes))


def theorem313_member(S):
    """Inverse, and no maximal isolated subgroup splits as C2 x (odd order)."""
    if not core.is_inverse_semigroup(S):
        return False
    return all(c2_times_odd(H) is None for H, _ in isolated_subgroups(S).values())


def no_isolated_order2(S):
    """Inverse with no isolated subgroup of order 2 (equivalently: every isolated H_e has odd order)."""
    if not core.is_inverse_semigroup(S):
        return False
    return all(len(els) % 2 == 1 for _, els in isolated_subgroups(S).values())


def no_nontrivial_isolated(S):
    if not core.is_inverse_semigroup(S):
        return False
    return all(len(els) == 1 for _, els in isolated_subgroups(S).values())


def combinatorial_inverse(S):
    return core.is_inverse_semigroup(S) and core.is_combinatorial(S)


PA_CLOSED_CLASSES = {
    "no_split_isolated": theorem313_member,
    "no_isolated_order2": no_isolated_order2,
    "no_nontrivial_isolated": no_nontrivial_isolated,
    "combinatorial_inverse": combinatorial_inverse,
}


# ---------------------------------------------------------------- short bypasses

def _idem_set_of(S, x):
    return frozenset(y for y in core.monogenic_inverse(S, x) if S.table[y][y] == y)


def is_a_covered(S, e, a):
    """e < aa^-1 with no idempotent of [[a]] strictly in between."""
    _need_inverse(S)
    inv = core.inverse_map(S)
    top = S.table[a][inv[a]]
    lt = core.idempotent_leq
    if e == top or not lt(S, e, top):
        return False
    return not any(f != e and f != top and lt(S, e, f) and lt(S, f, top)
                   for f in _idem_set_of(S, a))


@dataclass(frozen=True)
class Bypass:
    chain: tuple      # e_0 < e_1 < ... < e_n = aa^-1
    steps: tuple      # a_k = e_k a for k = 1..n

    def __len__(self):
        return len(self.chain) - 1


def short_bypass(S, e, a):
    """Shortest short bypass from e to aa^-1, ties broken lexicographically."""
    _need_inverse(S)
    t = S.table
    inv = core.inverse_map(S)
    top = t[a][inv[a]]
    if not (e != top and core.idempotent_leq(S, e, top)):
        return None
    E = sorted(core.idempotents(S))
    above_e = [f for f in E if core.idempotent_leq(S, e, f)]

    def nxt(f):
        ak = t[f][a]
        return [g for g in above_e if g != f and core.idempotent_leq(S, g, f) and is_a_covered(S, g, ak)]

    # distances down to e, by breadth-first search from e along reversed steps
    succ = {f: nxt(f) for f in above_e}
    dist = {e: 0}
    queue = deque([e])
    pred = {f: [] for f in above_e}
    for f, gs in succ.items():
        for g in gs:
            pred[g].append(f)
    while queue:
        g = queue.popleft()
        for f in pred[g]:
            if f not in dist:
                dist[f] = dist[g] + 1
                queue.append(f)
    if top not in dist:
        return None
    memo = {}

    def best(f):
        # lexicographically least shortest chain (as e_0..f)
        if f == e:
            return (e,)
        if f not in memo:
            memo[f] = min(best(g) + (f,) for g in succ[f] if dist.get(g) == dist[f] - 1)
        return memo[f]
    chain = best(top)
    steps = tuple(t[f][a] for f in chain[1:])
    for k in range(1, len(chain)):
        ak = steps[k - 1]
        assert t[ak][inv[ak]] == chain[k]
        assert is_a_covered(S, chain[k - 1], ak)
    return Bypass(chain, steps)


def _below_pairs(S):
    inv = core.inverse_map(S)
    E = sorted(core.idempotents(S))
    for a in range(S.order):
        top = S.table[a][inv[a]]
        for e in E:
            if e != top and core.idempotent_leq(S, e, top):
                yield e, a


def is_shortly_connected(S):
    _need_inverse(S)
    return all(short_bypass(S, e, a) is not None for e, a in _below_pairs(S))


def F_set(S, e, a):
    inv = core.inverse_map(S)
    top = S.table[a][inv[a]]
    return frozenset(f for f in _idem_set_of(S, a) if f != e and core.idempotent_leq(S, e, f)
                     and core.idempotent_leq(S, f, top))


def is_shortly_linked(S):
    """All F_{e,a} are finite; true on finite carriers, computed anyway."""
    _need_inverse(S)
    ok = all(len(F_set(S, e, a)) <= S.order for e, a in _below_pairs(S))
    if ok:
        assert is_shortly_connected(S)
    return ok


# ---------------------------------------------------------------- other classes

def is_completely_semisimple(S):
    """No D-class holds two distinct comparable idempotents."""
    g = core.green(S)
    t = S.table
    E = core.idempotents(S)
    for e in E:
        for f in E:
            if e != f and g.d_index[e] == g.d_index[f] and t[e][f] == e == t[f][e]:
                return False
    return True


def is_e_unitary(S):
    """e <= a with e idempotent forces a idempotent (inverse semigroups)."""
    _need_inverse(S)
    no = core.natural_order(S)
    E = core.idempotents(S)
    return all(a in E for e in E for a in range(S.order) if no.leq(e, a))


def is_clifford(S):
    if not core.is_regular(S):
        return False
    t = S.table
    return all(t[e][x] == t[x][e] for e in core.idempotents(S) for x in range(S.order))


def mu_classes(S):
    """Classes of the largest idempotent-separating congruence."""
    _need_inverse(S)
    a = S.array
    inv = np.array(core.inverse_map(S))
    E = np.array(sorted(core.idempotents(S)))
    # sig[x, k] = x^-1 e_k x
    sig = a[a[inv[:, None], E[None, :]], np.arange(S.order)[:, None]]
    groups = {}
    for x in range(S.order):
        groups.setdefault(tuple(sig[x].tolist()), []).append(x)
    return sorted(tuple(v) for v in groups.values())


def is_fundamental(S):
    return all(len(c) == 1 for c in mu_classes(S))


@dataclass
class ArchimedeanReport:
    """Pseudo/faintly/quasi-archimedean verdicts on a finite inverse semigroup.

    All three hold vacuously on finite carriers, which have no bicyclic and
    no free monogenic inverse subsemigroups; ``finite_vacuity`` flags that
    the verdicts say nothing about infinite semigroups.
    """
    pseudo: bool
    faintly: bool
    quasi: bool
    finite_vacuity: bool = True
    nongroup_monogenic_combinatorial: bool = True
    transcript: list = field(default_factory=list)


def archimedean_family(S):
    _need_inverse(S)
    notes = []
    no_bicyclic = is_completely_semisimple(S)
    assert no_bicyclic
    notes.append("no D-class has comparable idempotents, so no bicyclic subsemigroup")
    sizes = [len(core.monogenic_inverse(S, x)) for x in range(S.order)]
    notes.append(f"largest [[x]] has {max(sizes)} elements, so none is free")
    comb = True
    for x in sorted(core.N_set(S)):
        sub, _ = S.subsemigroup(sorted(core.monogenic_inverse(S, x)))
        if not core.is_combinatorial(sub):
            comb = False
            notes.append(f"[[{S.label(x)}]] has a nontrivial subgroup")
    notes.append("every [[x]] with x nongroup is combinatorial" if comb
                 else "some [[x]] with x nongroup is not combinatorial")
    return ArchimedeanReport(True, True, True, True, comb, notes)


def summary(S):
    """Dictionary of every predicate, for reports."""
    inv = core.is_inverse_semigroup(S)
    out = {
        "order": S.order,
        "idempotents": len(core.idempotents(S)),
        "regular": core.is_regular(S),
        "inverse": inv,
        "commutative": core.is_commutative(S),
        "group": core.is_group(S),
        "semilattice": core.is_semilattice(S),
        "band": core.is_band(S),
        "combinatorial": core.is_combinatorial(S),
        "clifford": is_clifford(S),
        "completely_semisimple": is_completely_semisimple(S),
        "isolated_idempotents": sorted(isolated_idempotents(S)),
    }
    for name, pred in PA_CLOSED_CLASSES.items():
        out[name] = pred(S)
    if inv:
        out["e_unitary"] = is_e_unitary(S)
        out["fundamental"] = is_fundamental(S)
        out["shortly_linked"] = is_shortly_linked(S)
        out["shortly_connected"] = is_shortly_connected(S)
    g = core.green(S)
    out["d_classes"] = len(g.d_classes)
    out["h_class_sizes"] = sorted(len(h) for h in g.h_classes)
    decs = {}
    for e, (H, els) in isolated_subgroups(S).items():
        d = c2_times_odd(H)
        if d is not None:
            decs[e] = (sorted(els[i] for i in d.A), sorted(els[i] for i in d.P))
    out["c2_times_odd"] = decs
    return out


def members_text(S, subset):
    return "{" + ",".join(S.label(x) for x in sorted(subset)) + "}"

