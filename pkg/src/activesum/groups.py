"""Finite permutation groups, subgroups, homomorphisms and Hom-set counts."""

from collections import deque
from dataclasses import dataclass
import itertools
import math

from .errors import CutoffExceeded, MembershipError, NotAHomomorphism
from .perm import Perm, format_cycles

# elements are only listed exhaustively below this size
ENUMERATION_CUTOFF = 100_000
# closure/BSGS cross-validation size
CROSS_CHECK_CUTOFF = 5_000
# subgroups up to this order compare by their element set
SUBGROUP_KEY_CUTOFF = 10_000
HOM_SOURCE_CUTOFF = 100
HOM_TARGET_CUTOFF = 2_000


class _Level:
    __slots__ = ("point", "gens", "transversal")

    def __init__(self, point, degree):
        self.point = point
        self.gens = []
        # orbit point -> coset representative u with point^u == orbit point
        self.transversal = {point: Perm.identity(degree)}


class PermGroup:
    """A permutation group given by generators.

    The base and strong generating set is built lazily on first use by a
    deterministic incremental Schreier-Sims.
    """

    def __init__(self, generators, degree=None, name=None, metadata=None):
        generators = list(generators)
        if degree is None:
            if not generators:
                raise ValueError("degree required for a group without generators")
            degree = generators[0].degree
        for g in generators:
            if g.degree != degree:
                raise ValueError(f"generator {g} has degree {g.degree}, expected {degree}")
        self.degree = degree
        self.generators = generators
        self.name = name
        self.metadata = dict(metadata or {})
        self._levels = None
        self._elements = None
        self._cayley = None

    @property
    def identity(self):
        return Perm.identity(self.degree)

    def __repr__(self):
        label = self.name or "PermGroup"
        return f"<{label} degree={self.degree} gens={len(self.generators)}>"

    # --- BSGS -------------------------------------------------------------

    def _bsgs(self):
        if self._levels is None:
            self._levels = []
            for g in self.generators:
                self._insert(g, 0)
        return self._levels

    def _sift(self, g, start=0):
        levels = self._levels
        for j in range(start, len(levels)):
            lev = levels[j]
            p = g.images[lev.point]
            u = lev.transversal.get(p)
            if u is None:
                return g, j
            g = g * u.inverse()
        return g, len(levels)

    def _insert(self, g, i):
        h, j = self._sift(g, i)
        if h.is_identity():
            return
        if j == len(self._levels):
            self._levels.append(_Level(h.first_moved(), self.degree))
        for lev in range(j, i - 1, -1):
            self._extend_level(lev, h)

    def _extend_level(self, lev, h):
        level = self._levels[lev]
        level.gens.append(h)
        trans = level.transversal
        old_points = list(trans)
        queue = deque()
        for p in old_points:
            q = h.images[p]
            if q not in trans:
                trans[q] = trans[p] * h
                queue.append(q)
        new_points = []
        while queue:
            p = queue.popleft()
            new_points.append(p)
            for s in level.gens:
                q = s.images[p]
                if q not in trans:
                    trans[q] = trans[p] * s
                    queue.append(q)
        pairs = [(p, h) for p in old_points]
        pairs += [(p, s) for p in new_points for s in level.gens]
        for p, s in pairs:
            q = s.images[p]
            schreier = trans[p] * s * trans[q].inverse()
            if not schreier.is_identity():
                self._insert(schreier, lev + 1)

    @property
    def base(self):
        return [lev.point for lev in self._bsgs()]

    @property
    def strong_generators(self):
        seen = []
        for lev in self._bsgs():
            for g in lev.gens:
                if g not in seen:
                    seen.append(g)
        return seen

    def basic_orbit_lengths(self):
        return [len(lev.transversal) for lev in self._bsgs()]

    def order(self):
        return math.prod(self.basic_orbit_lengths())

    def __len__(self):
        return self.order()

    def contains(self, x):
        if x.degree != self.degree:
            return False
        self._bsgs()
        h, _ = self._sift(x)
        return h.is_identity()

    __contains__ = contains

    def require(self, x):
        if not self.contains(x):
            raise MembershipError(f"{format_cycles(x)} is not an element of {self!r}")

    # --- enumeration ------------------------------------------------------

    def elements(self, cutoff=ENUMERATION_CUTOFF):
        """All elements, as a list, built from the transversals."""
        if self._elements is None:
            size = self.order()
            if size > cutoff:
                raise CutoffExceeded("element listing", size, cutoff)
            elems = [self.identity]
            for lev in reversed(self._bsgs()):
                reps = list(lev.transversal.values())
                elems = [x * u for x in elems for u in reps]
            self._elements = elems
        return self._elements

    def closure_elements(self, cutoff=CROSS_CHECK_CUTOFF):
        """All elements by breadth-first closure under the generators.

        Independent of the BSGS; used to cross-check it.
        """
        seen = {self.identity}
        queue = deque(seen)
        while queue:
            x = queue.popleft()
            for s in self.generators:
                y = x * s
                if y not in seen:
                    if len(seen) >= cutoff:
                        raise CutoffExceeded("closure enumeration", len(seen) + 1, cutoff)
                    seen.add(y)
                    queue.append(y)
        return seen

    def cayley(self, cutoff=ENUMERATION_CUTOFF):
        """Right Cayley graph data for the generators.

        Returns ``(elements, index, table, parent)``: ``table[i][k]`` is the index of
        ``elements[i] * generators[k]`` and ``parent[i]`` is ``(j, k)`` on a spanning
        tree rooted at the identity (index 0), or None for the root.
        """
        if self._cayley is None:
            size = self.order()
            if size > cutoff:
                raise CutoffExceeded("Cayley graph", size, cutoff)
            elements = [self.identity]
            index = {self.identity: 0}
            parent = [None]
            table = []
            i = 0
            while i < len(elements):
                x = elements[i]
                row = []
                for k, s in enumerate(self.generators):
                    y = x * s
                    j = index.get(y)
                    if j is None:
                        j = len(elements)
                        index[y] = j
                        elements.append(y)
                        parent.append((i, k))
                    row.append(j)
                table.append(row)
                i += 1
            self._cayley = (elements, index, table, parent)
        return self._cayley

    def random_element(self, rng):
        x = self.identity
        for lev in reversed(self._bsgs()):
            reps = list(lev.transversal.values())
            x = x * reps[rng.randrange(len(reps))]
        return x

    # --- derived queries ----------------------------------------------------

    def element_order(self, x):
        self.require(x)
        return x.order()

    def exponent(self, cutoff=ENUMERATION_CUTOFF):
        return math.lcm(1, *{x.order() for x in self.elements(cutoff)})

    def is_abelian(self):
        gens = self.generators
        return all(a * b == b * a for a, b in itertools.combinations(gens, 2))

    def is_cyclic(self, cutoff=ENUMERATION_CUTOFF):
        n = self.order()
        if n == 1:
            return True
        return self.is_abelian() and any(x.order() == n for x in self.elements(cutoff))

    def subgroup(self, generators, name=None):
        return Subgroup(self, generators, name=name)

    def conjugacy_class_sizes(self, cutoff=ENUMERATION_CUTOFF):
        remaining = set(self.elements(cutoff))
        sizes = []
        while remaining:
            x = min(remaining)
            orbit = {x}
            queue = [x]
            while queue:
                y = queue.pop()
                for s in self.generators:
                    z = y.conjugate(s)
                    if z not in orbit:
                        orbit.add(z)
                        queue.append(z)
            remaining -= orbit
            sizes.append(len(orbit))
        return sorted(sizes)

    def fingerprint(self):
        return group_fingerprint(self)


def group_fingerprint(G):
    """Short deterministic identifier: order, degree and a hash of the generators."""
    import hashlib

    text = ";".join(",".join(map(str, g.images)) for g in G.generators)
    digest = hashlib.sha256(f"{G.degree}|{text}".encode()).hexdigest()[:12]
    return f"order={G.order()} degree={G.degree} gens={digest}"


class Subgroup(PermGroup):
    """A subgroup of an ambient PermGroup.

    Two subgroups compare equal iff they have the same element set. Up to
    SUBGROUP_KEY_CUTOFF elements the comparison uses a cached frozenset key;
    beyond that it falls back to mutual generator membership.
    """

    def __init__(self, ambient, generators, name=None):
        generators = [g for g in generators]
        super().__init__(generators, degree=ambient.degree, name=name)
        for g in generators:
            ambient.require(g)
        self.ambient = ambient
        self._key = None

    @property
    def key(self):
        if self._key is None and self.order() <= SUBGROUP_KEY_CUTOFF:
            self._key = frozenset(self.elements())
        return self._key

    def __eq__(self, other):
        if not isinstance(other, Subgroup) or self.degree != other.degree:
            return NotImplemented
        if self.order() != other.order():
            return False
        if self.key is not None:
            return self.key == other.key
        return all(other.contains(g) for g in self.generators) and all(
            self.contains(g) for g in other.generators
        )

    def __hash__(self):
        if self.key is not None:
            return hash(self.key)
        return hash((self.degree, self.order()))

    def is_normal(self):
        return all(
            self.contains(x.conjugate(g)) for x in self.generators for g in self.ambient.generators
        )

    def cyclic_generator(self):
        """Deterministic generator of a cyclic subgroup, or None if not cyclic."""
        n = self.order()
        if n == 1:
            return self.identity
        if not self.is_abelian():
            return None
        gens = sorted(x for x in self.elements() if x.order() == n)
        return gens[0] if gens else None


def conjugate_subgroup(F, g):
    """Return the subgroup ``g^-1 F g`` of F's ambient group."""
    F.ambient.require(g)
    return Subgroup(F.ambient, [x.conjugate(g) for x in F.generators])


def order(G):
    return G.order()


def element_order(G, x):
    return G.element_order(x)


def exponent(G, cutoff=ENUMERATION_CUTOFF):
    return G.exponent(cutoff)


@dataclass(frozen=True)
class TorsionSet:
    """The elements x of a group with x^n == 1."""

    n: int
    elements: tuple

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.elements


def torsion_set(G, n, cutoff=ENUMERATION_CUTOFF):
    if n < 1:
        raise ValueError("n must be a positive integer")
    return TorsionSet(n, tuple(x for x in G.elements(cutoff) if n % x.order() == 0))


def hom_set_size(n, G, cutoff=ENUMERATION_CUTOFF):
    """|Hom(C_n, G)|, which equals the number of x in G with x^n == 1."""
    return len(torsion_set(G, n, cutoff))


class Homomorphism:
    """A homomorphism given by the images of the source generators.

    Well-definedness is verified at construction: the subgroup of
    source x target generated by the pairs (s_i, t_i) must project
    isomorphically onto the source. Small sources are checked on the Cayley
    graph; larger ones on the BSGS of that graph subgroup.
    """

    def __init__(self, source, target, images, check=True):
        images = list(images)
        if len(images) != len(source.generators):
            raise ValueError("need one image per source generator")
        for t in images:
            target.require(t)
        self.source = source
        self.target = target
        self.images = images
        self._table = None
        self._graph = None
        if check:
            self._verify()

    def _verify(self):
        if self.source.order() <= CROSS_CHECK_CUTOFF:
            self._build_table()
            return
        if self._graph_group().order() != self.source.order():
            raise NotAHomomorphism("generator images do not respect the source relations")

    def _build_table(self):
        elements, index, table, parent = self.source.cayley()
        d = self.target.degree
        imgs = [None] * len(elements)
        imgs[0] = Perm.identity(d)
        for i in range(1, len(elements)):
            j, k = parent[i]
            imgs[i] = imgs[j] * self.images[k]
        for i, row in enumerate(table):
            for k, j in enumerate(row):
                if imgs[i] * self.images[k] != imgs[j]:
                    raise NotAHomomorphism(
                        f"relation at {format_cycles(elements[i])} * generator {k} fails"
                    )
        self._table = dict(zip(elements, imgs))

    def _graph_group(self):
        if self._graph is None:
            ds, dt = self.source.degree, self.target.degree
            gens = [
                Perm._raw(s.images + tuple(ds + i for i in t.images))
                for s, t in zip(self.source.generators, self.images)
            ]
            self._graph = PermGroup(gens, degree=ds + dt)
        return self._graph

    def __call__(self, x):
        if self._table is not None:
            try:
                return self._table[x]
            except KeyError:
                raise MembershipError(f"{format_cycles(x)} not in source") from None
        self.source.require(x)
        ds = self.source.degree
        graph = self._graph_group()
        graph._bsgs()
        # sift (x, 1) through the graph group; base points lie in the source part
        g = Perm._raw(x.images + tuple(range(ds, ds + self.target.degree)))
        residue, _ = graph._sift(g)
        y = residue.inverse() * g
        return Perm._raw(tuple(i - ds for i in y.images[ds:]))

    def image(self):
        return PermGroup(self.images, degree=self.target.degree)

    def is_surjective(self):
        return self.image().order() == self.target.order()

    def kernel_order(self):
        return self.source.order() // self.image().order()

    def is_injective(self):
        return self.kernel_order() == 1

    def is_trivial(self):
        return all(t.is_identity() for t in self.images)

    def __repr__(self):
        return f"Homomorphism({self.source!r} -> {self.target!r})"


def _relators_from_cayley(G):
    """Spanning-tree relations of G: (i, k, j) meaning elements[i]*gen[k] == elements[j]."""
    elements, index, table, parent = G.cayley()
    return [(i, k, j) for i, row in enumerate(table) for k, j in enumerate(row)]


def enumerate_homs(source, target, source_cutoff=HOM_SOURCE_CUTOFF, target_cutoff=HOM_TARGET_CUTOFF):
    """All homomorphisms source -> target, by filtering generator assignments.

    Each assignment is tested against the full right multiplication table of
    the source (relations from its Cayley graph), after discarding images
    whose order does not divide the generator's order.
    """
    if source.order() > source_cutoff:
        raise CutoffExceeded("hom enumeration source", source.order(), source_cutoff)
    if target.order() > target_cutoff:
        raise CutoffExceeded("hom enumeration target", target.order(), target_cutoff)
    elements, index, table, parent = source.cayley()
    targets = target.elements()
    choices = [[t for t in targets if s.order() % t.order() == 0] for s in source.generators]
    relations = _relators_from_cayley(source)
    d = target.degree
    homs = []
    for assignment in itertools.product(*choices):
        imgs = [None] * len(elements)
        imgs[0] = Perm.identity(d)
        for i in range(1, len(elements)):
            j, k = parent[i]
            imgs[i] = imgs[j] * assignment[k]
        if all(imgs[i] * assignment[k] == imgs[j] for i, k, j in relations):
            h = Homomorphism(source, target, assignment, check=False)
            h._table = dict(zip(elements, imgs))
            homs.append(h)
    return homs


# --- named constructors ------------------------------------------------------


def symmetric_group(k):
    if k < 1:
        raise ValueError("degree must be positive")
    if k == 1:
        return PermGroup([], degree=1, name="sym1")
    gens = [Perm.from_cycles([(0, 1)], k)]
    if k > 2:
        gens.append(Perm.from_cycles([tuple(range(k))], k))
    return PermGroup(gens, degree=k, name=f"sym{k}")


def alternating_group(k):
    if k < 1:
        raise ValueError("degree must be positive")
    if k < 3:
        return PermGroup([], degree=k, name=f"alt{k}")
    gens = [Perm.from_cycles([(i, i + 1, i + 2)], k) for i in range(k - 2)]
    return PermGroup(gens, degree=k, name=f"alt{k}")


def cyclic_group(k):
    if k < 1:
        raise ValueError("order must be positive")
    if k == 1:
        return PermGroup([], degree=1, name="cyclic1")
    return PermGroup([Perm.from_cycles([tuple(range(k))], k)], degree=k, name=f"cyclic{k}")


def dihedral_group(k):
    """Dihedral group of order 2k acting on the vertices of a k-gon."""
    if k < 2:
        raise ValueError("dihedral_group needs k >= 2")
    if k == 2:
        gens = [Perm.from_cycles([(0, 1)], 4), Perm.from_cycles([(2, 3)], 4)]
        return PermGroup(gens, degree=4, name="dihedral2")
    rot = Perm.from_cycles([tuple(range(k))], k)
    refl = Perm([(-i) % k for i in range(k)])
    return PermGroup([rot, refl], degree=k, name=f"dihedral{k}")
