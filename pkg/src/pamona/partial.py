"""Partial bijections between finite index sets.

Maps act on the right and compose left to right, so ``a.then(b)`` sends
``x`` to ``b(a(x))``.  A map is stored as an image tuple over its source
carrier with ``-1`` marking points outside the domain.
"""
from dataclasses import dataclass

from .errors import CarrierMismatch

UNDEFINED = -1


def _mask(indices):
    m = 0
    for i in indices:
        m |= 1 << i
    return m


@dataclass(frozen=True)
class PartialBijection:
    image: tuple
    target_size: int
    source: object = None
    target: object = None

    def __post_init__(self):
        seen = set()
        for y in self.image:
            if y == UNDEFINED:
                continue
            if not 0 <= y < self.target_size:
                raise ValueError(f"image point {y} outside target of size {self.target_size}")
            if y in seen:
                raise ValueError(f"not injective: {y} is hit twice")
            seen.add(y)

    @classmethod
    def from_pairs(cls, pairs, source_size, target_size=None, source=None, target=None):
        if target_size is None:
            target_size = source_size
        img = [UNDEFINED] * source_size
        for x, y in dict(pairs).items():
            img[x] = y
        return cls(tuple(img), target_size, source, target)

    @classmethod
    def identity(cls, subset, size, carrier=None):
        img = [UNDEFINED] * size
        for x in subset:
            img[x] = x
        return cls(tuple(img), size, carrier, carrier)

    @classmethod
    def empty(cls, source_size, target_size=None, source=None, target=None):
        if target_size is None:
            target_size = source_size
        return cls((UNDEFINED,) * source_size, target_size, source, target)

    @property
    def source_size(self):
        return len(self.image)

    @property
    def domain(self):
        return frozenset(x for x, y in enumerate(self.image) if y != UNDEFINED)

    @property
    def range(self):
        return frozenset(y for y in self.image if y != UNDEFINED)

    @property
    def domain_mask(self):
        return _mask(self.domain)

    @property
    def range_mask(self):
        return _mask(self.range)

    def pairs(self):
        return [(x, y) for x, y in enumerate(self.image) if y != UNDEFINED]

    def __len__(self):
        return sum(1 for y in self.image if y != UNDEFINED)

    def __call__(self, x):
        y = self.image[x]
        if y == UNDEFINED:
            raise KeyError(x)
        return y

    def get(self, x, default=None):
        y = self.image[x]
        return default if y == UNDEFINED else y

    def is_total(self):
        return UNDEFINED not in self.image

    def is_identity(self):
        return all(y == UNDEFINED or x == y for x, y in enumerate(self.image))

    def then(self, other):
        """Composite ``self`` followed by ``other``."""
        if self.target is not None and other.source is not None and self.target != other.source:
            raise CarrierMismatch(f"cannot compose a map into {self.target!r} with a map out of {other.source!r}")
        if self.target_size != other.source_size:
            raise CarrierMismatch("carrier sizes differ")
        oi = other.image
        img = tuple(UNDEFINED if y == UNDEFINED else oi[y] for y in self.image)
        return PartialBijection(img, other.target_size, self.source, other.target)

    def inverse(self):
        img = [UNDEFINED] * self.target_size
        for x, y in enumerate(self.image):
            if y != UNDEFINED:
                img[y] = x
        return PartialBijection(tuple(img), self.source_size, self.target, self.source)

    def restrict(self, subset):
        keep = set(subset)
        img = tuple(y if x in keep else UNDEFINED for x, y in enumerate(self.image))
        return PartialBijection(img, self.target_size, self.source, self.target)

    def union(self, other):
        if self.source_size != other.source_size or self.target_size != other.target_size:
            raise CarrierMismatch("carrier sizes differ")
        img = list(self.image)
        for x, y in other.pairs():
            if img[x] not in (UNDEFINED, y):
                raise ValueError(f"maps disagree at {x}")
            img[x] = y
        return PartialBijection(tuple(img), self.target_size, self.source, self.target)

    def sort_key(self):
        dom = sorted(self.domain)
        return (len(dom), tuple(dom), tuple(self.image[x] for x in dom))

    def __repr__(self):
        body = ", ".join(f"{x}->{y}" for x, y in self.pairs())
        return f"PartialBijection({{{body}}})"


def transport(theta, alpha):
    """Move ``alpha`` along the total bijection ``theta``: theta^-1 . alpha . theta.

    The result is defined on the image of ``dom alpha`` under ``theta``.
    """
    if not theta.is_total():
        raise ValueError("transport needs a total bijection")
    return theta.inverse().then(alpha).then(theta)
