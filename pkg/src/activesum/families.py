"""Conjugation-closed families of distinct subgroups."""

from collections import deque
import hashlib

from .errors import FamilyError, FamilyTooLarge, ParseError
from .groups import ENUMERATION_CUTOFF, PermGroup, Subgroup, conjugate_subgroup

FAMILY_CAP = 10_000
INFINITY = 0


class SubgroupFamily:
    """An ordered list of distinct subgroups of ``ambient``, closed under conjugation.

    Families carry the trivial partial order only: two members are comparable
    iff equal. Construction validates distinctness and closure.
    """

    def __init__(self, ambient, members, description=None, validate=True):
        self.ambient = ambient
        self.members = list(members)
        self.description = description
        self._index = None
        if validate:
            self.validate()

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def index_of(self, H):
        """Position of the member equal to H as an element set, or None."""
        if self._index is None:
            self._index = {}
            for i, F in enumerate(self.members):
                self._index.setdefault(F, i)
        return self._index.get(H)

    def distinct_witness(self):
        seen = {}
        for i, F in enumerate(self.members):
            if F in seen:
                return (seen[F], i)
            seen[F] = i
        return None

    def closure_witness(self):
        """First (member index, ambient generator index) whose conjugate is missing."""
        for i, F in enumerate(self.members):
            for k, g in enumerate(self.ambient.generators):
                if self.index_of(conjugate_subgroup(F, g)) is None:
                    return (i, k)
        return None

    def validate(self):
        for F in self.members:
            if F.ambient is not self.ambient:
                for g in F.generators:
                    self.ambient.require(g)
        dup = self.distinct_witness()
        if dup is not None:
            raise FamilyError(f"members {dup[0]} and {dup[1]} are the same subgroup")
        missing = self.closure_witness()
        if missing is not None:
            i, k = missing
            raise FamilyError(f"member {i} conjugated by ambient generator {k} is not a member")

    def fingerprint(self):
        h = hashlib.sha256()
        for F in self.members:
            h.update(repr(sorted(x.images for x in F.elements())).encode())
        digest = h.hexdigest()[:12]
        orders = sorted(F.order() for F in self.members)
        return f"members={len(self.members)} orders={_compress(orders)} key={digest}"

    def __repr__(self):
        return f"<SubgroupFamily {len(self.members)} members of {self.ambient!r}>"


def _compress(values):
    out = []
    for v in values:
        if out and out[-1][0] == v:
            out[-1][1] += 1
        else:
            out.append([v, 1])
    return ",".join(f"{v}x{c}" if c > 1 else str(v) for v, c in out)


def _as_subgroup(G, H):
    if isinstance(H, Subgroup) and H.ambient is G:
        return H
    return Subgroup(G, list(H.generators) if isinstance(H, PermGroup) else list(H))


def conjugation_closure(G, seeds, cap=FAMILY_CAP):
    """Smallest conjugation-closed family containing the seed subgroups.

    Orbit algorithm under conjugation by the generators of G, deduplicating by
    element set; members appear in discovery order.
    """
    members = []
    index = {}
    queue = deque()
    for H in seeds:
        H = _as_subgroup(G, H)
        if H not in index:
            index[H] = len(members)
            members.append(H)
            queue.append(H)
    while queue:
        F = queue.popleft()
        for g in G.generators:
            K = conjugate_subgroup(F, g)
            if K not in index:
                if len(members) >= cap:
                    raise FamilyTooLarge(f"conjugation closure exceeds {cap} members")
                index[K] = len(members)
                members.append(K)
                queue.append(K)
    fam = SubgroupFamily(G, members, validate=False)
    fam._index = index
    return fam


def cyclic_family(G, m, cutoff=ENUMERATION_CUTOFF):
    """All cyclic subgroups of G of order exactly m, ordered by smallest generator."""
    seen = {}
    for x in sorted(G.elements(cutoff)):
        if x.order() != m:
            continue
        H = Subgroup(G, [x])
        if H not in seen:
            seen[H] = len(seen)
    fam = SubgroupFamily(G, list(seen), description=f"cyclic:{m}", validate=False)
    fam._index = dict(seen)
    return fam


def is_generating(fam):
    gens = [g for F in fam.members for g in F.generators]
    return PermGroup(gens, degree=fam.ambient.degree).order() == fam.ambient.order()


def exponent_divides(fam, n, cutoff=ENUMERATION_CUTOFF):
    return all(n % F.exponent(cutoff) == 0 for F in fam.members)


# --- Coxeter groups -----------------------------------------------------------


class CoxeterMatrix:
    """Symmetric Coxeter matrix; off-diagonal ``INFINITY`` (0) marks no relation."""

    def __init__(self, entries, name=None):
        m = [list(row) for row in entries]
        r = len(m)
        for i in range(r):
            if len(m[i]) != r:
                raise ValueError("Coxeter matrix must be square")
            if m[i][i] != 1:
                raise ValueError("Coxeter matrix diagonal must be 1")
            for j in range(r):
                if m[i][j] != m[j][i]:
                    raise ValueError("Coxeter matrix must be symmetric")
                if i != j and m[i][j] != INFINITY and m[i][j] < 2:
                    raise ValueError(f"off-diagonal entry {m[i][j]} must be >= 2 or infinity")
        self.entries = m
        self.name = name

    @property
    def rank(self):
        return len(self.entries)

    @classmethod
    def from_upper(cls, rank, upper, name=None):
        upper = list(upper)
        if len(upper) != rank * (rank - 1) // 2:
            raise ValueError(f"rank {rank} needs {rank * (rank - 1) // 2} upper-triangle entries")
        m = [[1] * rank for _ in range(rank)]
        it = iter(upper)
        for i in range(rank):
            for j in range(i + 1, rank):
                m[i][j] = m[j][i] = next(it)
        return cls(m, name=name)

    @classmethod
    def parse(cls, text, source=None, name=None):
        """Parse a rank line followed by the upper-triangle entries (0 = infinity)."""
        numbers = []
        for lineno, line in enumerate(text.splitlines(), 1):
            line = line.split("#", 1)[0]
            for tok in line.split():
                try:
                    numbers.append((int(tok), lineno))
                except ValueError:
                    raise ParseError(f"expected integer, got {tok!r}", lineno, source) from None
        if not numbers:
            raise ParseError("empty Coxeter matrix file", None, source)
        rank = numbers[0][0]
        if rank < 1:
            raise ParseError("rank must be positive", numbers[0][1], source)
        try:
            return cls.from_upper(rank, [v for v, _ in numbers[1:]], name=name)
        except ValueError as exc:
            raise ParseError(str(exc), numbers[-1][1], source) from None

    def format(self):
        r = self.rank
        lines = [str(r)]
        for i in range(r - 1):
            lines.append(" ".join(str(self.entries[i][j]) for j in range(i + 1, r)))
        return "\n".join(lines) + "\n"

    def relators(self):
        """Coxeter relators as words over generators 1..r (``(x_i x_j)^m_ij``)."""
        r = self.rank
        rels = [(i + 1, i + 1) for i in range(r)]
        for i in range(r):
            for j in range(i + 1, r):
                m = self.entries[i][j]
                if m != INFINITY:
                    rels.append((i + 1, j + 1) * m)
        return rels


COXETER_TYPES = {
    "A1": (1, []),
    "A2": (2, [3]),
    "A3": (3, [3, 2, 3]),
    "B2": (2, [4]),
    "B3": (3, [4, 2, 3]),
    "H3": (3, [5, 2, 3]),
}


def coxeter_matrix(name):
    """Named Coxeter matrix: A1-A3, B2, B3, H3 or I2(m)."""
    key = name.strip().upper().replace(" ", "")
    if key.startswith("I2(") and key.endswith(")"):
        m = int(key[3:-1])
        return CoxeterMatrix.from_upper(2, [m], name=f"I2({m})")
    if key not in COXETER_TYPES:
        raise KeyError(f"unknown Coxeter type {name!r}")
    rank, upper = COXETER_TYPES[key]
    return CoxeterMatrix.from_upper(rank, upper, name=key)


def coxeter_reflection_family(M, budget=None):
    """Realize W(M) by coset enumeration and return it with its reflection family.

    The family is the conjugation closure of the subgroups generated by the
    standard generators.
    """
    from .fp import Presentation, todd_coxeter, DEFAULT_BUDGET

    names = [f"s{i + 1}" for i in range(M.rank)]
    P = Presentation(names, M.relators())
    table = todd_coxeter(P, [], budget=DEFAULT_BUDGET if budget is None else budget)
    perms = table.generator_perms()
    W = PermGroup(perms, degree=table.n_cosets, name=f"W({M.name or 'M'})")
    fam = conjugation_closure(W, [Subgroup(W, [p]) for p in perms])
    fam.description = "conjugates of standard generators"
    return W, fam
