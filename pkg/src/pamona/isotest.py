"""Decision procedures for isomorphism, anti-isomorphism and PA-isomorphism."""
from dataclasses import dataclass

from . import core
from .core import members_of
from .errors import SizeCapExceeded
from .pam import DEFAULT_CAP, induced_by, pa_monoid, phi_assoc, phi_e, star_map
from .partial import PartialBijection
from .search import (is_anti_isomorphism, is_isomorphism, refine_signatures,
                     table_signatures)
from .search import isomorphisms as _table_isos
from .sublat import lattice_isomorphisms, sub_lattice
from .witness import ANTI_ISO, ISO, MONOID_ISO, PA_ISO, IsoWitness

# monoids above this order are not searched
MONOID_SEARCH_CAP = 50000


def _sigs(S):
    return S.cached("search_sigs", lambda: refine_signatures(S.table, table_signatures(S.table)))


def isomorphisms(S, T, limit=None):
    if S.order != T.order:
        return
    for f in _table_isos(S.table, T.table, _sigs(S), _sigs(T), limit=limit):
        yield IsoWitness(ISO, f, S, T)


def anti_isomorphisms(S, T, limit=None):
    Top = core.opposite(T)
    for w in isomorphisms(S, Top, limit=limit):
        yield IsoWitness(ANTI_ISO, w.mapping, S, T)


def is_isomorphic(S, T):
    return next(isomorphisms(S, T, limit=1), None) is not None


def is_anti_isomorphic(S, T):
    return next(anti_isomorphisms(S, T, limit=1), None) is not None


def automorphisms(S):
    return list(isomorphisms(S, S))


def monoid_signatures(M):
    sig = getattr(M, "_search_sigs", None)
    if sig is None:
        sig = refine_signatures(M.table, table_signatures(M.table))
        M._search_sigs = sig
    return sig


def _idempotent_lattices_match(M1, M2):
    if M1.lattice is not None and M2.lattice is not None:
        return next(lattice_isomorphisms(M1.lattice, M2.lattice, limit=1), None) is not None
    return len(M1.idempotents()) == len(M2.idempotents())


def monoid_isomorphic(M1, M2, limit=None):
    """Stream monoid isomorphisms M1 -> M2 (identity and zero forced)."""
    if len(M1) > MONOID_SEARCH_CAP or len(M2) > MONOID_SEARCH_CAP:
        raise SizeCapExceeded(f"monoid search limited to order {MONOID_SEARCH_CAP}")
    if len(M1) != len(M2) or len(M1.idempotents()) != len(M2.idempotents()):
        return
    if (M1.zero is None) != (M2.zero is None):
        return
    if not _idempotent_lattices_match(M1, M2):
        return
    fixed = [(M1.identity, M2.identity)]
    if M1.zero is not None and M1.zero != M1.identity:
        fixed.append((M1.zero, M2.zero))
    kind = PA_ISO if M1.kind and M1.kind == M2.kind else MONOID_ISO
    for f in _table_isos(M1.table, M2.table, monoid_signatures(M1), monoid_signatures(M2),
                         fixed=fixed, limit=limit):
        yield IsoWitness(kind, f, M1, M2)


@dataclass
class PAVerdict:
    """Answer of :func:`pa_isomorphic`; truthy when a PA-isomorphism exists."""
    isomorphic: bool
    witness: IsoWitness = None
    star: object = None
    phi_e: PartialBijection = None
    phi: object = None
    reason: str = ""

    def __bool__(self):
        return self.isomorphic


def pa_prefilter(S, T):
    """Cheap necessary conditions; returns a reason string when they fail."""
    L1, L2 = sub_lattice(S), sub_lattice(T)
    if len(L1) != len(L2):
        return f"|Sub| differs ({len(L1)} vs {len(L2)})"
    if next(lattice_isomorphisms(L1, L2, limit=1), None) is None:
        return "subsemigroup lattices are not isomorphic"
    return ""


def pa_isomorphic(S, T, cap=DEFAULT_CAP, derive=True):
    reason = pa_prefilter(S, T)
    if reason:
        return PAVerdict(False, reason=reason)
    M1, M2 = pa_monoid(S, cap), pa_monoid(T, cap)
    if len(M1) != len(M2):
        return PAVerdict(False, reason=f"|PA| differs ({len(M1)} vs {len(M2)})")
    w = next(monoid_isomorphic(M1, M2, limit=1), None)
    if w is None:
        return PAVerdict(False, reason="no monoid isomorphism")
    assert w.verify()
    if not derive:
        return PAVerdict(True, w)
    star = star_map(w)
    return PAVerdict(True, w, star, phi_e(w, star), phi_assoc(w, star))


def pa_automorphisms(S, cap=DEFAULT_CAP, limit=None):
    M = pa_monoid(S, cap)
    return monoid_isomorphic(M, M, limit=limit)


# ---------------------------------------------------------------- inducing bijections

@dataclass(frozen=True)
class Inducer:
    theta: PartialBijection
    kind: str   # "iso", "anti-iso", "iso+anti-iso" or "neither"


def classify_bijection(theta, S, T):
    f = theta.image
    iso = is_isomorphism(S.table, T.table, f)
    anti = is_anti_isomorphism(S.table, T.table, f)
    if iso and anti:
        return "iso+anti-iso"
    if iso:
        return ISO
    if anti:
        return ANTI_ISO
    return "neither"


def inducing_bijections(phi, star=None):
    """Every total bijection theta: S -> T that induces phi."""
    star = star or star_map(phi)
    M1, M2 = phi.source, phi.target
    S, T = M1.semigroup, M2.semigroup
    n = S.order
    L = M1.lattice
    images = {m: star(m) for m in L.members}
    cand = []
    for x in range(n):
        ok = []
        for y in range(n):
            if all(((m >> x) & 1) == ((images[m] >> y) & 1) for m in L.members):
                ok.append(y)
        cand.append(ok)
    fixed = phi_assoc(phi, star).map.image
    for x in range(n):
        if fixed[x] != -1:
            if fixed[x] not in cand[x]:
                return []
            cand[x] = [fixed[x]]
    out = []
    img = [-1] * n
    used = set()
    order = sorted(range(n), key=lambda x: (len(cand[x]), x))

    def rec(k):
        if k == n:
            theta = PartialBijection(tuple(img), n)
            if induced_by(phi, theta):
                out.append(theta)
            return
        x = order[k]
        for y in cand[x]:
            if y not in used:
                img[x] = y
                used.add(y)
                rec(k + 1)
                used.discard(y)
                img[x] = -1
    rec(0)
    return out


def induced_by_iso_or_antiiso(phi, star=None):
    """Classify each bijection inducing phi as iso / anti-iso / neither."""
    star = star or star_map(phi)
    S, T = phi.source.semigroup, phi.target.semigroup
    found = [Inducer(t, classify_bijection(t, S, T)) for t in inducing_bijections(phi, star)]
    if core.M_set(S) == frozenset(range(S.order)) or len(core.M_set(S)) == S.order:
        expected = phi_assoc(phi, star).map
        assert [i.theta for i in found] == [expected]
    return found


def iota_compose_check(S, anti):
    """For inverse S, composing an anti-isomorphism with inversion gives an isomorphism."""
    inv = core.inverse_map(S)
    f = tuple(anti.mapping[inv[x]] for x in range(S.order))
    return is_isomorphism(S.table, anti.target.table, f)


def members_text(mask):
    return "{" + ",".join(map(str, members_of(mask))) + "}"
