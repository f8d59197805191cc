"""Small exact linear algebra over GF(q) tables and over the rationals."""

from __future__ import annotations

from fractions import Fraction


def rref(rows, field):
    """Reduced row echelon form over GF(q).

    `rows` is a sequence of label sequences.  Returns (rref_rows, pivot_cols)
    where rref_rows is a tuple of nonzero rows (tuples).  Pivoting is
    deterministic: first nonzero column, then smallest row index.
    """
    m = [list(r) for r in rows]
    if not m:
        return (), ()
    nrows, ncols = len(m), len(m[0])
    add, mul, neg, inv = field._add, field._mul, field._neg, field._inv
    r = 0
    pivots = []
    for c in range(ncols):
        pr = None
        for i in range(r, nrows):
            if m[i][c] != 0:
                pr = i
                break
        if pr is None:
            continue
        if pr != r:
            m[r], m[pr] = m[pr], m[r]
        s = inv[m[r][c]]
        if s != 1:
            mr = m[r]
            muls = mul[s]
            m[r] = [muls[v] for v in mr]
        mr = m[r]
        for i in range(nrows):
            if i != r and m[i][c] != 0:
                g = neg[m[i][c]]
                mulg = mul[g]
                mi = m[i]
                m[i] = [add[mi[j]][mulg[mr[j]]] for j in range(ncols)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return tuple(tuple(row) for row in m[:r]), tuple(pivots)


def rank(rows, field) -> int:
    return len(rref(rows, field)[0])


def mat_vec(mat, vec, field):
    """Matrix-vector product over GF(q), labels in, labels out."""
    add, mul = field._add, field._mul
    out = []
    for row in mat:
        acc = 0
        for a, b in zip(row, vec):
            acc = add[acc][mul[a][b]]
        out.append(acc)
    return out


def random_invertible(field, size, rng):
    """A uniformly sampled invertible size x size matrix over GF(q).

    Deterministic for a fixed rng state; resamples until full rank.
    """
    q = field.q
    while True:
        m = [[rng.randrange(q) for _ in range(size)] for _ in range(size)]
        if rank(m, field) == size:
            return tuple(tuple(r) for r in m)


def solve_fraction_free(a_rows, b):
    """Solve A y = b exactly for square invertible integer A.

    Fraction-free (Bareiss) forward elimination keeps every intermediate
    entry an integer; pivoting is first nonzero column, smallest row index.
    Back substitution produces exact Fractions.
    """
    n = len(a_rows)
    m = [list(map(int, row)) + [int(bv)] for row, bv in zip(a_rows, b)]
    prev = 1
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k] != 0:
                piv = i
                break
        if piv is None:
            raise ValueError("matrix is singular")
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
        mk = m[k]
        pkk = mk[k]
        for i in range(k + 1, n):
            mi = m[i]
            mik = mi[k]
            for j in range(k + 1, n + 1):
                mi[j] = (mi[j] * pkk - mik * mk[j]) // prev
            mi[k] = 0
        prev = pkk
    y = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(m[i][n])
        for j in range(i + 1, n):
            s -= m[i][j] * y[j]
        y[i] = s / m[i][i]
    return y
