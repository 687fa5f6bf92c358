"""SL(n, q) acting on the nonzero vectors of GF(q)^n."""

import itertools
import math

from .errors import UnsupportedParameters
from .groups import PermGroup
from .perm import Perm

# Conway polynomials for the non-prime fields we support, low bit first.
_MODULI = {4: (2, 0b111), 8: (2, 0b1011)}


class GF:
    """The field with q elements, q a prime or one of 4, 8.

    Elements are the integers 0..q-1; for q = 2^k they encode polynomials
    over GF(2) bitwise, and the class of ``x`` (encoded 2) is primitive.
    """

    def __init__(self, q):
        if q in _MODULI:
            self.p, self.modulus = _MODULI[q]
        elif q >= 2 and all(q % d for d in range(2, math.isqrt(q) + 1)):
            self.p, self.modulus = q, None
        else:
            raise UnsupportedParameters(f"field of order {q} is not supported")
        self.q = q
        self._mul = [[self._slow_mul(a, b) for b in range(q)] for a in range(q)]
        self._inv = [None] + [next(b for b in range(1, q) if self._mul[a][b] == 1) for a in range(1, q)]

    def _slow_mul(self, a, b):
        if self.modulus is None:
            return a * b % self.q
        deg = self.modulus.bit_length() - 1
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if a >> deg & 1:
                a ^= self.modulus
        return r

    def add(self, a, b):
        return a ^ b if self.modulus else (a + b) % self.q

    def neg(self, a):
        return a if self.modulus else (-a) % self.q

    def mul(self, a, b):
        return self._mul[a][b]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self._inv[a]

    def primitive_element(self):
        for a in range(2, self.q):
            x, k = a, 1
            while x != 1:
                x, k = self.mul(x, a), k + 1
            if k == self.q - 1:
                return a
        return 1


def _matvec(F, M, v):
    # row vector times matrix: (v M)_j = sum_i v_i M_ij
    n = len(v)
    out = []
    for j in range(n):
        s = 0
        for i in range(n):
            if v[i] and M[i][j]:
                s = F.add(s, F.mul(v[i], M[i][j]))
        out.append(s)
    return tuple(out)


def _identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def sl_generators(n, F):
    """Standard generating matrices of SL(n, q), with a label for each."""
    gens = []
    t = _identity_matrix(n)
    t[0][1] = 1
    gens.append(("transvection I+E_01", t))
    w = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        w[i][i + 1] = 1
    w[n - 1][0] = F.neg(1) if n % 2 == 0 else 1
    gens.append(("signed cycle", w))
    if F.q != F.p:
        a = F.primitive_element()
        d = _identity_matrix(n)
        d[0][0] = a
        d[1][1] = F.inv(a)
        gens.append((f"diag(w, w^-1) with w={a}", d))
    return gens


def sl_to_perm(n, q):
    """SL(n, q) as a permutation group on the q^n - 1 nonzero vectors.

    Vectors are ordered lexicographically and numbered from 0; matrices act
    on row vectors from the right, matching the left-to-right composition of
    Perm. For prime q the group is generated by a transvection and a signed
    n-cycle matrix; for q = 4, 8 a diagonal matrix is added since those two
    only generate SL(n, 2) there.
    """
    if n not in (2, 3, 4):
        raise UnsupportedParameters(f"n={n} not in {{2, 3, 4}}")
    if q > 8:
        raise UnsupportedParameters(f"q={q} exceeds 8")
    F = GF(q)
    if q**n - 1 > 1000:
        raise UnsupportedParameters(f"q^n - 1 = {q**n - 1} exceeds 1000")
    vectors = [v for v in itertools.product(range(q), repeat=n) if any(v)]
    index = {v: i for i, v in enumerate(vectors)}
    perms = []
    labels = []
    for label, M in sl_generators(n, F):
        perms.append(Perm([index[_matvec(F, M, v)] for v in vectors]))
        labels.append(label)
    meta = {"n": n, "q": q, "generators": labels}
    return PermGroup(perms, degree=len(vectors), name=f"sl:{n}:{q}", metadata=meta)


def sl_order(n, q):
    """|SL(n, q)| from the standard formula."""
    total = 1
    for i in range(n):
        total *= q**n - q**i
    return total // (q - 1)
