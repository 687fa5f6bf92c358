"""Todd-Coxeter coset enumeration.

Two strategies share one kernel: HLT (scan-and-fill every relator at every
live coset in order) and Felsch (define the first hole, then chase every
consequence through the deduction stack). Coincidences are processed
immediately with a union-find over coset indices. The working table is a
flat list, ``-1`` marking undefined entries, with column ``2i`` for
generator i and ``2i + 1`` for its inverse.
"""

from collections import deque

from ..errors import BudgetExceeded
from ..perm import Perm

DEFAULT_BUDGET = 1_000_000
# compact once this fraction of allocated rows is dead
COMPACT_DEAD_FRACTION = 0.25
COMPACT_MIN_ROWS = 1024


def word_columns(w):
    return [2 * (x - 1) if x > 0 else 2 * (-x - 1) + 1 for x in w]


class _Abort(Exception):
    pass


class _Enumerator:
    def __init__(self, ngens, budget, felsch):
        self.nc = 2 * ngens
        self.inv = [c ^ 1 for c in range(self.nc)]
        self.budget = budget
        self.felsch = felsch
        self.table = [-1] * self.nc
        self.parent = [0]
        self.live = 1
        self.peak = 1
        self.defined = 1
        self.coincidences = 0
        self.deductions = 0
        self.compactions = 0
        self.stack = []

    def stats(self):
        return {
            "cosets_final": self.live,
            "cosets_peak": self.peak,
            "cosets_defined": self.defined,
            "coincidences": self.coincidences,
            "deductions": self.deductions,
            "compactions": self.compactions,
        }

    def rep(self, k):
        parent = self.parent
        root = k
        while parent[root] != root:
            root = parent[root]
        while parent[k] != root:
            parent[k], k = root, parent[k]
        return root

    def define(self, a, x):
        if self.live >= self.budget:
            raise _Abort
        b = len(self.parent)
        self.parent.append(b)
        self.table.extend([-1] * self.nc)
        self.table[a * self.nc + x] = b
        self.table[b * self.nc + self.inv[x]] = a
        self.live += 1
        self.defined += 1
        if self.live > self.peak:
            self.peak = self.live
        if self.felsch:
            self.stack.append((a, x))

    def _merge(self, k, l, queue):
        p, q = self.rep(k), self.rep(l)
        if p != q:
            if q < p:
                p, q = q, p
            self.parent[q] = p
            queue.append(q)
            self.live -= 1
            self.coincidences += 1

    def coincidence(self, a, b):
        nc, inv, T = self.nc, self.inv, self.table
        queue = deque()
        self._merge(a, b, queue)
        while queue:
            g = queue.popleft()
            base = g * nc
            for x in range(nc):
                d = T[base + x]
                if d < 0:
                    continue
                T[d * nc + inv[x]] = -1
                mu, nu = self.rep(g), self.rep(d)
                t = T[mu * nc + x]
                if t >= 0:
                    self._merge(nu, t, queue)
                    continue
                t = T[nu * nc + inv[x]]
                if t >= 0:
                    self._merge(mu, t, queue)
                    continue
                T[mu * nc + x] = nu
                T[nu * nc + inv[x]] = mu
                if self.felsch:
                    self.stack.append((mu, x))

    def scan(self, a, w, fill):
        nc, inv, T = self.nc, self.inv, self.table
        f, i = a, 0
        b, j = a, len(w) - 1
        while True:
            while i <= j:
                t = T[f * nc + w[i]]
                if t < 0:
                    break
                f = t
                i += 1
            if i > j:
                if f != a:
                    self.coincidence(f, a)
                return
            while j >= i:
                t = T[b * nc + inv[w[j]]]
                if t < 0:
                    break
                b = t
                j -= 1
            if j < i:
                self.coincidence(f, b)
                return
            if i == j:
                T[f * nc + w[i]] = b
                T[b * nc + inv[w[i]]] = f
                self.deductions += 1
                if self.felsch:
                    self.stack.append((f, w[i]))
                return
            if not fill:
                return
            self.define(f, w[i])

    def process_deductions(self, conjugates):
        parent, T, nc, inv = self.parent, self.table, self.nc, self.inv
        stack = self.stack
        while stack:
            a, x = stack.pop()
            if parent[a] != a:
                continue
            for w in conjugates[x]:
                self.scan(a, w, False)
                if parent[a] != a:
                    break
            if parent[a] != a:
                continue
            b = T[a * nc + x]
            if b >= 0 and parent[b] == b:
                for w in conjugates[inv[x]]:
                    self.scan(b, w, False)
                    if parent[b] != b:
                        break

    def maybe_compact(self, pointer):
        rows = len(self.parent)
        dead = rows - self.live
        if rows < COMPACT_MIN_ROWS or dead <= COMPACT_DEAD_FRACTION * rows:
            return pointer
        return self.compact(pointer)

    def compact(self, pointer):
        """Renumber live cosets in order; returns the remapped row pointer."""
        nc, T, parent = self.nc, self.table, self.parent
        new_index = [-1] * len(parent)
        k = 0
        new_pointer = None
        for i in range(len(parent)):
            if i == pointer:
                new_pointer = k
            if parent[i] == i:
                new_index[i] = k
                k += 1
        if new_pointer is None:
            new_pointer = k
        new_table = []
        for i in range(len(parent)):
            if parent[i] == i:
                row = T[i * nc:(i + 1) * nc]
                new_table.extend(new_index[e] if e >= 0 else -1 for e in row)
        self.table = new_table
        self.parent = list(range(k))
        self.stack = [(new_index[a], x) for a, x in self.stack if parent[a] == a]
        self.compactions += 1
        return new_pointer

    def run(self, relators, subgroup_words):
        rels = [word_columns(w) for w in relators]
        subs = [word_columns(w) for w in subgroup_words if w]
        conjugates = None
        if self.felsch:
            conjugates = [[] for _ in range(self.nc)]
            seen = set()
            for w in rels:
                winv = [self.inv[c] for c in reversed(w)]
                for v in (w, winv):
                    for k in range(len(v)):
                        r = tuple(v[k:] + v[:k])
                        if r not in seen:
                            seen.add(r)
                            conjugates[r[0]].append(r)
        for w in subs:
            self.scan(0, w, True)
        if self.felsch:
            self.process_deductions(conjugates)
        a = 0
        nc = self.nc
        while a < len(self.parent):
            if self.parent[a] == a:
                if self.felsch:
                    for x in range(nc):
                        if self.parent[a] != a:
                            break
                        if self.table[a * nc + x] < 0:
                            self.define(a, x)
                            self.process_deductions(conjugates)
                else:
                    for w in rels:
                        self.scan(a, w, True)
                        if self.parent[a] != a:
                            break
                    if self.parent[a] == a:
                        for x in range(nc):
                            if self.table[a * nc + x] < 0:
                                self.define(a, x)
            a = self.maybe_compact(a + 1)

    def standardized_rows(self):
        """Live rows renumbered by breadth-first order from coset 0."""
        nc, T, parent = self.nc, self.table, self.parent
        order = [0]
        new = {0: 0}
        i = 0
        while i < len(order):
            c = order[i]
            for x in range(nc):
                d = T[c * nc + x]
                if d not in new:
                    new[d] = len(order)
                    order.append(d)
            i += 1
        assert len(order) == self.live and all(parent[c] == c for c in order)
        return [[new[T[c * nc + x]] for x in range(nc)] for c in order]


class CosetTable:
    """A complete, closed coset table in standard form.

    ``rows[c][2*i]`` is the image of coset c under generator i and
    ``rows[c][2*i + 1]`` under its inverse. Coset 0 is the subgroup itself.
    """

    def __init__(self, ngens, rows, stats, strategy):
        self.ngens = ngens
        self.rows = rows
        self.stats = stats
        self.strategy = strategy

    @property
    def n_cosets(self):
        return len(self.rows)

    def generator_perms(self):
        return [Perm._raw(tuple(row[2 * i] for row in self.rows)) for i in range(self.ngens)]

    def act(self, coset, w):
        for c in word_columns(w):
            coset = self.rows[coset][c]
        return coset

    def relator_holds(self, w):
        return all(self.act(c, w) == c for c in range(self.n_cosets))

    def is_transitive(self):
        seen = {0}
        stack = [0]
        while stack:
            c = stack.pop()
            for d in self.rows[c]:
                if d not in seen:
                    seen.add(d)
                    stack.append(d)
        return len(seen) == self.n_cosets

    def format_stats(self):
        keys = ["cosets_final", "cosets_peak", "coincidences", "deductions", "cosets_defined"]
        return "\n".join(f"{k}={self.stats[k]}" for k in keys)

    def __repr__(self):
        return f"<CosetTable cosets={self.n_cosets} gens={self.ngens} strategy={self.strategy}>"


def todd_coxeter(presentation, subgroup_words=(), budget=DEFAULT_BUDGET, strategy="hlt"):
    """Enumerate the cosets of the subgroup generated by ``subgroup_words``.

    With no subgroup words the number of cosets is the order of the group.
    Raises BudgetExceeded once more than ``budget`` cosets are simultaneously
    live; the exception carries the statistics gathered up to that point.
    """
    if budget < 1:
        raise ValueError("budget must be at least 1")
    if strategy not in ("hlt", "felsch"):
        raise ValueError(f"unknown strategy {strategy!r}")
    enum = _Enumerator(presentation.ngens, budget, strategy == "felsch")
    try:
        enum.run(presentation.relators, list(subgroup_words))
    except _Abort:
        raise BudgetExceeded(budget, enum.stats()) from None
    rows = enum.standardized_rows()
    stats = enum.stats()
    stats["cosets_final"] = len(rows)
    return CosetTable(presentation.ngens, rows, stats, strategy)
