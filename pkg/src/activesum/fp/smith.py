"""Smith normal form over the integers and abelian invariants of presentations."""

from dataclasses import dataclass
import math


def smith_diagonal(matrix):
    """Diagonal of the Smith normal form of an integer matrix.

    Returns the nonzero invariant factors d_1 | d_2 | ... in increasing order.
    Pure Python ints, so there is no overflow.
    """
    A = [list(map(int, row)) for row in matrix]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        # pivot: smallest nonzero absolute value in the remaining block
        pivot = None
        for i in range(t, rows):
            for j in range(t, cols):
                if A[i][j] and (pivot is None or abs(A[i][j]) < abs(A[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        i, j = pivot
        A[t], A[i] = A[i], A[t]
        for row in A:
            row[t], row[j] = row[j], row[t]
        while True:
            done = True
            p = A[t][t]
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    done = False
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    done = False
            if done:
                # divisibility: fold any entry not divisible by the pivot into row t
                bad = next(
                    ((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p),
                    None,
                )
                if bad is None:
                    break
                A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
                done = False
            if not done:
                # move the smallest nonzero entry of row/column t to the pivot
                best = (abs(A[t][t]), t, t) if A[t][t] else None
                for i in range(t + 1, rows):
                    if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                        best = (abs(A[i][t]), i, t)
                for j in range(t + 1, cols):
                    if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                        best = (abs(A[t][j]), t, j)
                _, i, j = best
                A[t], A[i] = A[i], A[t]
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


@dataclass(frozen=True)
class AbelianInvariants:
    torsion: tuple
    free_rank: int

    def order(self):
        """|G^ab|, or None when the free rank is positive."""
        return None if self.free_rank else math.prod(self.torsion)

    def __str__(self):
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "1"


def relation_matrix(presentation):
    rows = []
    for w in presentation.relators:
        row = [0] * presentation.ngens
        for x in w:
            row[abs(x) - 1] += 1 if x > 0 else -1
        rows.append(row)
    return rows


def abelianization(presentation):
    """Invariant factors (> 1) and free rank of the abelianized presentation."""
    n = presentation.ngens
    diag = smith_diagonal(relation_matrix(presentation)) if presentation.relators else []
    return AbelianInvariants(tuple(d for d in diag if d > 1), n - len(diag))
