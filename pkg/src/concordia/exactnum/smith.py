"""Smith normal form over Z with unimodular transforms."""
from __future__ import annotations


def _identity(n):
    return [[int(i == j) for j in range(n)] for i in range(n)]


def smith_normal_form(M):
    """Return (factors, U, V, D) with U*M*V = D diagonal.

    ``factors`` lists the nonzero diagonal entries d_1 | d_2 | ...,
    all positive.  U and V are unimodular integer matrices.
    """
    A = [list(map(int, row)) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    U = _identity(m)
    V = _identity(n)

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for R in (A, V):
            for row in R:
                row[i], row[j] = row[j], row[i]

    def add_row(src, dst, k):     # row dst += k * row src
        if k:
            A[dst] = [a + k * b for a, b in zip(A[dst], A[src])]
            U[dst] = [a + k * b for a, b in zip(U[dst], U[src])]

    def add_col(src, dst, k):     # col dst += k * col src
        if k:
            for R in (A, V):
                for row in R:
                    row[dst] += k * row[src]

    for t in range(min(m, n)):
        # pivot: smallest nonzero magnitude in the trailing block
        while True:
            best = None
            for i in range(t, m):
                for j in range(t, n):
                    if A[i][j] and (best is None or abs(A[i][j]) < abs(A[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                break
            swap_rows(t, best[0])
            swap_cols(t, best[1])
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                q = A[i][t] // p
                add_row(t, i, -q)
                dirty |= A[i][t] != 0
            for j in range(t + 1, n):
                q = A[t][j] // p
                add_col(t, j, -q)
                dirty |= A[t][j] != 0
            if dirty:
                continue
            # divisibility of the remaining block
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if A[i][j] % p), None)
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if best is None:
            break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]

    factors = [A[i][i] for i in range(min(m, n)) if A[i][i]]
    return factors, U, V, A
