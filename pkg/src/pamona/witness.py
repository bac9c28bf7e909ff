from dataclasses import dataclass

import numpy as np

ISO = "iso"
ANTI_ISO = "anti-iso"
MONOID_ISO = "monoid-iso"
LATTICE_ISO = "lattice-iso"
PA_ISO = "pa-iso"
KINDS = (ISO, ANTI_ISO, MONOID_ISO, LATTICE_ISO, PA_ISO)


def _as_array(table):
    return np.asarray(getattr(table, "table", table), dtype=np.int64)


def homomorphism_holds(t1, t2, f, anti=False):
    """Vectorised check of f(ab) = f(a)f(b) (or f(b)f(a) when ``anti``)."""
    a1 = np.asarray(t1, dtype=np.int64)
    a2 = np.asarray(t2, dtype=np.int64)
    fa = np.asarray(f, dtype=np.int64)
    lhs = fa[a1]
    rhs = a2[fa[None, :], fa[:, None]] if anti else a2[fa[:, None], fa[None, :]]
    return bool((lhs == rhs).all())


@dataclass(frozen=True)
class IsoWitness:
    """A bijection certifying that ``source`` and ``target`` are related by ``kind``.

    ``mapping[i]`` is the image of source element (or lattice member) ``i``.
    """
    kind: str
    mapping: tuple
    source: object
    target: object

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown witness kind {self.kind!r}")

    def __call__(self, i):
        return self.mapping[i]

    def inverse(self):
        inv = [0] * len(self.mapping)
        for i, j in enumerate(self.mapping):
            inv[j] = i
        return IsoWitness(self.kind, tuple(inv), self.target, self.source)

    def verify(self):
        f = self.mapping
        if sorted(f) != list(range(len(f))):
            return False
        if self.kind == LATTICE_ISO:
            from .sublat import LatticeIso
            return LatticeIso(self.source, self.target, tuple(f)).verify()
        s, t = self.source, self.target
        if len(f) != len(s.table) or len(f) != len(t.table):
            return False
        if not homomorphism_holds(s.table, t.table, f, anti=self.kind == ANTI_ISO):
            return False
        if self.kind in (MONOID_ISO, PA_ISO):
            if f[s.identity] != t.identity:
                return False
        return True
