"""Group presentations and words.

A word is a tuple of nonzero ints: ``k`` stands for generator ``k-1`` and
``-k`` for its inverse.
"""

import re

from ..errors import ParseError


def inverse_word(w):
    return tuple(-x for x in reversed(w))


def free_reduce(w):
    out = []
    for x in w:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(w):
    w = free_reduce(w)
    i, j = 0, len(w)
    while j - i >= 2 and w[i] == -w[j - 1]:
        i += 1
        j -= 1
    return w[i:j]


def canonical_relator(w):
    """Least rotation of w or its inverse; equal keys mean the same normal closure."""
    w = cyclic_reduce(w)
    if not w:
        return w
    candidates = []
    for v in (w, inverse_word(w)):
        candidates += [v[k:] + v[:k] for k in range(len(v))]
    return min(candidates)


def power_word(gen, k):
    """Word for generator index ``gen`` (0-based) raised to the integer k."""
    letter = gen + 1 if k >= 0 else -(gen + 1)
    return (letter,) * abs(k)


class Presentation:
    """Generators plus relators, with an optional label per generator.

    Relators are freely and cyclically reduced on construction; empty ones are
    dropped and duplicates (up to rotation and inversion) removed, keeping the
    first occurrence.
    """

    def __init__(self, generators, relators=(), labels=None):
        self.generators = list(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        ngens = len(self.generators)
        seen = set()
        rels = []
        for w in relators:
            w = tuple(w)
            for x in w:
                if x == 0 or abs(x) > ngens:
                    raise ValueError(f"letter {x} does not name a generator")
            r = cyclic_reduce(w)
            if not r:
                continue
            key = canonical_relator(r)
            if key in seen:
                continue
            seen.add(key)
            rels.append(r)
        self.relators = rels
        if labels is not None and len(labels) != ngens:
            raise ValueError("need one label per generator")
        self.labels = labels

    @property
    def ngens(self):
        return len(self.generators)

    def __repr__(self):
        return f"<Presentation gens={self.ngens} relators={len(self.relators)}>"

    def word_str(self, w):
        return " ".join(self.generators[abs(x) - 1] + ("'" if x < 0 else "") for x in w)

    def format(self):
        lines = ["gens " + " ".join(self.generators)]
        lines += [self.word_str(r) for r in self.relators]
        return "\n".join(lines) + "\n"

    def parse_word(self, text, lineno=None, source=None):
        return parse_word(text, self.generators, lineno, source)

    def evaluate(self, w, images, identity):
        """Value of word ``w`` given an image per generator (anything with * and inverse())."""
        x = identity
        invs = {}
        for letter in w:
            k = abs(letter) - 1
            if letter > 0:
                x = x * images[k]
            else:
                if k not in invs:
                    invs[k] = images[k].inverse()
                x = x * invs[k]
        return x

    @classmethod
    def parse(cls, text, source=None):
        """Parse ``gens a b c`` followed by one relator per line.

        A relator is a whitespace-separated sequence of symbols; ``a'`` is the
        inverse of ``a`` and ``a^k`` / ``a'^k`` denote powers. ``#`` starts a
        comment.
        """
        gens = None
        rels = []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if gens is None:
                parts = line.split()
                if parts[0] != "gens":
                    raise ParseError("first line must be 'gens <symbols>'", lineno, source)
                gens = parts[1:]
                if len(set(gens)) != len(gens):
                    raise ParseError("duplicate generator symbol", lineno, source)
                for g in gens:
                    if not _SYMBOL_RE.fullmatch(g):
                        raise ParseError(f"bad generator symbol {g!r}", lineno, source)
                continue
            rels.append(parse_word(line, gens, lineno, source))
        if gens is None:
            raise ParseError("missing 'gens' line", None, source)
        return cls(gens, rels)


_SYMBOL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_TOKEN_RE = re.compile(r"([A-Za-z_][A-Za-z0-9_]*)('?)(?:\^(-?\d+))?")


def parse_word(text, generators, lineno=None, source=None):
    index = {g: i for i, g in enumerate(generators)}
    word = []
    for tok in text.split():
        m = _TOKEN_RE.fullmatch(tok)
        if not m:
            raise ParseError(f"bad token {tok!r}", lineno, source)
        name, prime, power = m.groups()
        if name not in index:
            raise ParseError(f"undeclared generator {name!r}", lineno, source)
        k = int(power) if power is not None else 1
        if prime:
            k = -k
        word.extend(power_word(index[name], k))
    return tuple(word)
