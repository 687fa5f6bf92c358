"""Permutations of {0, ..., degree-1}.

Products compose left to right: ``(p * q)[i] == q[p[i]]``, so points are
acted on from the right and ``x ** g`` style conjugation reads
``g.inverse() * x * g``.
"""

import math
import re

from .errors import ParseError


class Perm:
    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError(f"not a permutation: {images!r}")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def _raw(cls, images):
        # trusted constructor, skips the bijection check
        p = object.__new__(cls)
        p.images = images
        p._hash = hash(images)
        return p

    @classmethod
    def identity(cls, degree):
        return cls._raw(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles, degree):
        images = list(range(degree))
        for cyc in cycles:
            cyc = list(cyc)
            if len(set(cyc)) != len(cyc):
                raise ValueError(f"repeated point in cycle {cyc}")
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                if not 0 <= a < degree:
                    raise ValueError(f"point {a} out of range for degree {degree}")
                images[a] = b
        return cls(images)

    @property
    def degree(self):
        return len(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def __call__(self, i):
        return self.images[i]

    def __mul__(self, other):
        if not isinstance(other, Perm):
            return NotImplemented
        q = other.images
        return Perm._raw(tuple([q[i] for i in self.images]))

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm._raw(tuple(inv))

    __invert__ = inverse

    def __pow__(self, k):
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conjugate(self, g):
        """Return ``g^-1 * self * g``."""
        # relabel each point i -> g[i]
        gi = g.images
        images = [0] * len(gi)
        for i, j in enumerate(self.images):
            images[gi[i]] = gi[j]
        return Perm._raw(tuple(images))

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self, include_fixed=False):
        seen = set()
        out = []
        for i in range(len(self.images)):
            if i in seen:
                continue
            cyc = [i]
            seen.add(i)
            j = self.images[i]
            while j != i:
                cyc.append(j)
                seen.add(j)
                j = self.images[j]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self):
        return sorted((len(c) for c in self.cycles(include_fixed=True)), reverse=True)

    def order(self):
        return math.lcm(*[len(c) for c in self.cycles(include_fixed=True)]) if self.images else 1

    def sign(self):
        return -1 if sum(len(c) - 1 for c in self.cycles()) % 2 else 1

    def first_moved(self):
        for i, j in enumerate(self.images):
            if i != j:
                return i
        return None

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Perm({format_cycles(self)!r}, degree={self.degree})"

    def __str__(self):
        return format_cycles(self)


def format_cycles(p):
    cycles = p.cycles()
    if not cycles:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cycles)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text, degree=None):
    """Parse disjoint-cycle notation such as ``(0 1)(2 3 4)``.

    Cycles need not be disjoint; they are multiplied left to right. Points may
    be separated by spaces or commas. If ``degree`` is None it is taken as one
    more than the largest point mentioned.
    """
    stripped = text.strip()
    if not stripped:
        raise ParseError(f"empty permutation {text!r}")
    cycles = []
    pos = 0
    for m in _CYCLE_RE.finditer(stripped):
        if stripped[pos:m.start()].strip():
            raise ParseError(f"could not parse permutation {text!r}")
        pos = m.end()
        body = m.group(1).replace(",", " ").split()
        try:
            cycles.append([int(x) for x in body])
        except ValueError:
            raise ParseError(f"non-integer point in {text!r}") from None
    if stripped[pos:].strip() or not cycles and stripped != "()":
        raise ParseError(f"could not parse permutation {text!r}")
    top = max((max(c) for c in cycles if c), default=-1) + 1
    if degree is None:
        degree = max(top, 1)
    elif top > degree:
        raise ParseError(f"point {top - 1} out of range for degree {degree} in {text!r}")
    result = Perm.identity(degree)
    for c in cycles:
        if len(c) > 1:
            try:
                result = result * Perm.from_cycles([c], degree)
            except ValueError as exc:
                raise ParseError(str(exc)) from None
    return result
