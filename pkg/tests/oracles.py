"""Independent brute-force oracles.

Nothing here imports the package: permutations are plain tuples and
group orders of presentations come from a word graph, not coset
enumeration.
"""

from collections import deque
import itertools


def compose(p, q):
    """p then q."""
    return tuple(q[i] for i in p)


def inverse(p):
    out = [0] * len(p)
    for i, j in enumerate(p):
        out[j] = i
    return tuple(out)


def conjugate(x, g):
    return compose(compose(inverse(g), x), g)


def identity(d):
    return tuple(range(d))


def cycle_perm(cycles, d):
    out = list(range(d))
    for c in cycles:
        for a, b in zip(c, c[1:] + c[:1]):
            out[a] = b
    return tuple(out)


def closure(gens, d):
    e = identity(d)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = compose(x, g)
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return seen


def power(x, k):
    y = identity(len(x))
    for _ in range(k):
        y = compose(y, x)
    return y


def order_by_powers(x):
    k, y = 1, x
    while y != identity(len(x)):
        y = compose(y, x)
        k += 1
    return k


def torsion_count(gens, d, n):
    return sum(1 for x in closure(gens, d) if power(x, n) == identity(d))


def cyclic_subgroups_of_order(gens, d, m):
    elems = closure(gens, d)
    subs = set()
    for x in elems:
        if order_by_powers(x) == m:
            subs.add(frozenset(power(x, k) for k in range(m)))
    return subs


def word_graph_order(ngens, relations, max_len, short_len):
    """Order of the monoid <gens | lhs = rhs> when it is a finite group.

    Words up to ``max_len`` are joined whenever one arises from the other by
    replacing an occurrence of one side of a relation by the other. Returns
    the number of classes among words of length <= ``short_len`` once that is
    proved exact, else None:

    * every word of length short_len + 1 is joined to a shorter one, so
      there are at most that many elements;
    * right multiplication by each generator is well defined on the
      classes and satisfies every relation, giving a transitive action of
      a quotient on that many points, so there are at least that many.
    """
    words = [()]
    for length in range(1, max_len + 1):
        words += list(itertools.product(range(ngens), repeat=length))
    index = {w: i for i, w in enumerate(words)}
    parent = list(range(len(words)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    def union(i, j):
        a, b = find(i), find(j)
        if a != b:
            parent[max(a, b)] = min(a, b)

    moves = [(l, r) for l, r in relations] + [(r, l) for l, r in relations]
    for w in words:
        for lhs, rhs in moves:
            k = len(lhs)
            for i in range(len(w) - k + 1):
                if w[i:i + k] == lhs:
                    v = w[:i] + rhs + w[i + k:]
                    if len(v) <= max_len:
                        union(index[w], index[v])

    short = [w for w in words if len(w) <= short_len]
    classes = sorted({find(index[w]) for w in short})
    if short_len + 1 > max_len:
        return None
    short_roots = set(classes)
    for w in words:
        if len(w) == short_len + 1 and find(index[w]) not in short_roots:
            return None
    pos = {c: i for i, c in enumerate(classes)}
    action = []
    for g in range(ngens):
        img = [None] * len(classes)
        for w in short:
            c = pos[find(index[w])]
            t = pos.get(find(index[w + (g,)]))
            if t is None or (img[c] is not None and img[c] != t):
                return None
            img[c] = t
        action.append(img)

    def act(c, word):
        for g in word:
            c = action[g][c]
        return c

    for lhs, rhs in relations:
        if any(act(c, lhs) != act(c, rhs) for c in range(len(classes))):
            return None
    seen = {pos[find(index[()])]}
    stack = list(seen)
    while stack:
        c = stack.pop()
        for g in range(ngens):
            t = action[g][c]
            if t not in seen:
                seen.add(t)
                stack.append(t)
    if len(seen) != len(classes):
        return None
    return len(classes)


def active_sum_relations(gens, d, m):
    """Monoid relations of the cyclic-encoded active sum of all order-m cyclic subgroups.

    Built from scratch: members found by brute force, each with its least
    generator. Relations are ``c^m = 1`` and ``c2 c1 = c1 c3^k`` whenever
    c1^-1 c2 c1 = c3^k in the ambient group.
    """
    subs = sorted(cyclic_subgroups_of_order(gens, d, m), key=lambda s: min(x for x in s if order_by_powers(x) == m))
    reps = [min(x for x in s if order_by_powers(x) == m) for s in subs]
    member_of = {s: i for i, s in enumerate(subs)}
    rels = [((i,) * m, ()) for i in range(len(reps))]
    for i1, h in enumerate(reps):
        for i2, g in enumerate(reps):
            gh = conjugate(g, h)
            conj_sub = frozenset(conjugate(x, h) for x in subs[i2])
            j = member_of[conj_sub]
            k = next(k for k in range(m) if power(reps[j], k) == gh)
            rels.append(((i2, i1), (i1,) + (j,) * k))
    return len(reps), rels
