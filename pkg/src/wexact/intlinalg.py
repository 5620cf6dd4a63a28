"""Exact integer matrix algebra: Hermite and Smith normal forms and the
linear solvers built on them.

Everything here is plain Python integers (arbitrary precision), no floats.
Matrices are immutable ``Mat`` values carrying explicit dimensions so that
0-row and 0-column matrices behave correctly; they appear constantly as
presentations of trivial groups.

Conventions:

* ``hnf(M)`` returns ``(H, U)`` with ``U`` unimodular and ``H = M @ U`` in
  column echelon form (pivots positive, entries left of a pivot reduced
  modulo it, zero columns pushed to the right).
* ``snf(M)`` returns ``(D, S, T)`` with ``S @ M @ T = D`` diagonal,
  ``d1 | d2 | ...``, all diagonal entries nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd


@dataclass(frozen=True)
class Mat:
    rows: int
    cols: int
    data: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        assert len(self.data) == self.rows
        assert all(len(r) == self.cols for r in self.data)

    @staticmethod
    def from_rows(rows, ncols=None):
        rows = [tuple(int(x) for x in r) for r in rows]
        if rows:
            ncols = len(rows[0])
        elif ncols is None:
            ncols = 0
        return Mat(len(rows), ncols, tuple(rows))

    @staticmethod
    def from_cols(cols, nrows=None):
        cols = [list(c) for c in cols]
        if cols:
            nrows = len(cols[0])
        elif nrows is None:
            nrows = 0
        return Mat(nrows, len(cols),
                   tuple(tuple(int(c[i]) for c in cols) for i in range(nrows)))

    @staticmethod
    def identity(n):
        return Mat(n, n, tuple(tuple(1 if i == j else 0 for j in range(n))
                               for i in range(n)))

    @staticmethod
    def zero(rows, cols):
        return Mat(rows, cols, tuple((0,) * cols for _ in range(rows)))

    def col(self, j):
        return tuple(self.data[i][j] for i in range(self.rows))

    def columns(self):
        return [self.col(j) for j in range(self.cols)]

    def __matmul__(self, other: "Mat") -> "Mat":
        assert self.cols == other.rows, (self.cols, other.rows)
        od = other.data
        out = []
        for i in range(self.rows):
            ri = self.data[i]
            out.append(tuple(sum(ri[k] * od[k][j] for k in range(self.cols))
                             for j in range(other.cols)))
        return Mat(self.rows, other.cols, tuple(out))

    def __add__(self, other: "Mat") -> "Mat":
        assert (self.rows, self.cols) == (other.rows, other.cols)
        return Mat(self.rows, self.cols,
                   tuple(tuple(a + b for a, b in zip(ra, rb))
                         for ra, rb in zip(self.data, other.data)))

    def __sub__(self, other: "Mat") -> "Mat":
        return self + other.scale(-1)

    def scale(self, k: int) -> "Mat":
        return Mat(self.rows, self.cols,
                   tuple(tuple(k * x for x in r) for r in self.data))

    def transpose(self) -> "Mat":
        return Mat(self.cols, self.rows,
                   tuple(tuple(self.data[i][j] for i in range(self.rows))
                         for j in range(self.cols)))

    def hstack(self, other: "Mat") -> "Mat":
        assert self.rows == other.rows
        return Mat(self.rows, self.cols + other.cols,
                   tuple(ra + rb for ra, rb in zip(self.data, other.data)))

    def vstack(self, other: "Mat") -> "Mat":
        assert self.cols == other.cols
        return Mat(self.rows + other.rows, self.cols, self.data + other.data)

    def submatrix(self, rows, cols) -> "Mat":
        rows = list(rows)
        cols = list(cols)
        return Mat(len(rows), len(cols),
                   tuple(tuple(self.data[i][j] for j in cols) for i in rows))

    def is_zero(self) -> bool:
        return all(x == 0 for r in self.data for x in r)


def _xgcd(a, b):
    """Return (g, x, y) with g = gcd(a, b) = a*x + b*y, g >= 0."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def hnf(M: Mat) -> tuple[Mat, Mat]:
    """Column-style Hermite normal form: H = M @ U with U unimodular."""
    m = [list(r) for r in M.data]
    u = [list(r) for r in Mat.identity(M.cols).data]
    nrows, ncols = M.rows, M.cols

    def colop(j, k, a, b, c, d):
        # (col_j, col_k) <- (a*col_j + b*col_k, c*col_j + d*col_k)
        for mat in (m, u):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    def negate_col(j):
        for mat in (m, u):
            for row in mat:
                row[j] = -row[j]

    piv = 0
    for i in range(nrows):
        # locate a column >= piv with nonzero entry in row i
        nz = [j for j in range(piv, ncols) if m[i][j] != 0]
        if not nz:
            continue
        j0 = nz[0]
        if j0 != piv:
            colop(piv, j0, 0, 1, 1, 0)
        for j in range(piv + 1, ncols):
            if m[i][j] == 0:
                continue
            a, b = m[i][piv], m[i][j]
            g, x, y = _xgcd(a, b)
            colop(piv, j, x, y, -(b // g), a // g)
        if m[i][piv] < 0:
            negate_col(piv)
        # reduce earlier columns against this pivot
        p = m[i][piv]
        for j in range(piv):
            q = m[i][j] // p
            if q:
                for mat in (m, u):
                    for row in mat:
                        row[j] -= q * row[piv]
        piv += 1
        if piv == ncols:
            break
    H = Mat.from_rows(m, ncols)
    U = Mat.from_rows(u, ncols)
    return H, U


def _negate_col(m, u, j):
    for mat in (m, u):
        for row in mat:
            row[j] = -row[j]


def hnf_basis(M: Mat) -> Mat:
    """Nonzero columns of the column HNF of M: a canonical basis of the
    column lattice (empty Mat with M.rows rows if the lattice is zero)."""
    H, _ = hnf(M)
    cols = [H.col(j) for j in range(H.cols) if any(H.col(j))]
    return Mat.from_cols(cols, M.rows)


def in_span(M: Mat, b) -> bool:
    return solve(M, b) is not None


def solve(M: Mat, b) -> tuple[int, ...] | None:
    """One integer solution x of M x = b, or None."""
    b = list(b)
    assert len(b) == M.rows
    H, U = hnf(M)
    y = [0] * M.cols
    # forward substitution over the echelon columns
    j = 0
    for i in range(M.rows):
        if j < H.cols and H.data[i][j] != 0:
            q, r = divmod(b[i], H.data[i][j])
            if r != 0:
                return None
            y[j] = q
            for ii in range(M.rows):
                b[ii] -= q * H.data[ii][j]
            j += 1
        elif b[i] != 0:
            return None
    if any(b):
        return None
    x = U @ Mat.from_cols([y], M.cols)
    return x.col(0)


def kernel_basis(M: Mat) -> Mat:
    """Basis of {x : M x = 0} as columns (cols may be 0)."""
    H, U = hnf(M)
    cols = [U.col(j) for j in range(M.cols) if not any(H.col(j))]
    return Mat.from_cols(cols, M.cols)


def solve_mod(M: Mat, R: Mat, b) -> tuple[int, ...] | None:
    """One x with M x = b modulo the column span of R, or None."""
    assert M.rows == R.rows
    aug = M.hstack(R)
    z = solve(aug, b)
    if z is None:
        return None
    return z[:M.cols]


def snf(M: Mat) -> tuple[Mat, Mat, Mat]:
    """Smith normal form: S @ M @ T = D, divisibility chain, d_i >= 0."""
    m = [list(r) for r in M.data]
    nrows, ncols = M.rows, M.cols
    s = [list(r) for r in Mat.identity(nrows).data]
    t = [list(r) for r in Mat.identity(ncols).data]

    def rowop(i, k, a, b, c, d):
        for mat in (m, s):
            ri, rk = mat[i], mat[k]
            for j in range(len(ri)):
                x, y = ri[j], rk[j]
                ri[j], rk[j] = a * x + b * y, c * x + d * y

    def colop(j, k, a, b, c, d):
        for mat in (m, t):
            for row in mat:
                x, y = row[j], row[k]
                row[j], row[k] = a * x + b * y, c * x + d * y

    def negate_col(j):
        for mat in (m, t):
            for row in mat:
                row[j] = -row[j]

    def swap_pair(k):
        rowop(k, k + 1, 0, 1, 1, 0)
        colop(k, k + 1, 0, 1, 1, 0)

    def find_pivot(start):
        best = None
        for i in range(start, nrows):
            for j in range(start, ncols):
                v = abs(m[i][j])
                if v and (best is None or v < best[0]):
                    best = (v, i, j)
        return best

    n = min(nrows, ncols)
    for k in range(n):
        while True:
            p = find_pivot(k)
            if p is None:
                break
            _, pi, pj = p
            if pi != k:
                rowop(k, pi, 0, 1, 1, 0)
            if pj != k:
                colop(k, pj, 0, 1, 1, 0)
            dirty = False
            for i in range(k + 1, nrows):
                if m[i][k]:
                    a, b = m[k][k], m[i][k]
                    if b % a == 0:
                        rowop(i, k, 1, -(b // a), 0, 1)
                    else:
                        g, x, y = _xgcd(a, b)
                        rowop(k, i, x, y, -(b // g), a // g)
                        dirty = True
            for j in range(k + 1, ncols):
                if m[k][j]:
                    a, b = m[k][k], m[k][j]
                    if b % a == 0:
                        colop(j, k, 1, -(b // a), 0, 1)
                    else:
                        g, x, y = _xgcd(a, b)
                        colop(k, j, x, y, -(b // g), a // g)
                        dirty = True
            if not dirty and all(m[i][k] == 0 for i in range(k + 1, nrows)) \
                    and all(m[k][j] == 0 for j in range(k + 1, ncols)):
                break
        if m[k][k] < 0:
            negate_col(k)
    # enforce the divisibility chain on the diagonal
    changed = True
    while changed:
        changed = False
        for k in range(n - 1):
            a, b = m[k][k], m[k + 1][k + 1]
            if a == 0 and b != 0:
                swap_pair(k)
                changed = True
            elif a and b and b % a != 0:
                # 2x2 fold: diag(a, b) -> diag(gcd, +-lcm)
                colop(k, k + 1, 1, 1, 0, 1)          # col_k += col_{k+1}
                g, x, y = _xgcd(m[k][k], m[k + 1][k])
                rowop(k, k + 1, x, y,
                      -(m[k + 1][k] // g), m[k][k] // g)
                if m[k][k + 1]:
                    q = m[k][k + 1] // m[k][k]
                    colop(k + 1, k, 1, -q, 0, 1)
                if m[k + 1][k + 1] < 0:
                    negate_col(k + 1)
                if m[k][k] < 0:
                    negate_col(k)
                changed = True
    D = Mat.from_rows(m, ncols)
    S = Mat.from_rows(s, nrows)
    T = Mat.from_rows(t, ncols)
    return D, S, T


def invariant_factors(M: Mat) -> list[int]:
    """Diagonal of the SNF (nonzero entries, including 1s), in chain order."""
    D, _, _ = snf(M)
    out = []
    for k in range(min(D.rows, D.cols)):
        if D.data[k][k]:
            out.append(D.data[k][k])
    return out


def is_unimodular(M: Mat) -> bool:
    if M.rows != M.cols:
        return False
    return all(d == 1 for d in invariant_factors(M)) and \
        len(invariant_factors(M)) == M.rows


def solve_transform(A: Mat, B: Mat, R: Mat) -> Mat | None:
    """One X (p x q) with X @ A = B modulo col span of R per column.

    A is q x n, B is p x n, R is p x r. Returns None if unsolvable.
    """
    p, q, n = B.rows, A.rows, A.cols
    assert B.cols == n and R.rows == p
    # unknowns: vec(X) row-major (p*q) then one relation vector per column of B
    nunk = p * q + R.cols * n
    rows = []
    rhs = []
    for j in range(n):
        for i in range(p):
            row = [0] * nunk
            for k in range(q):
                row[i * q + k] = A.data[k][j]
            for rr in range(R.cols):
                row[p * q + j * R.cols + rr] = R.data[i][rr]
            rows.append(row)
            rhs.append(B.data[i][j])
    sol = solve(Mat.from_rows(rows, nunk), rhs)
    if sol is None:
        return None
    return Mat(p, q, tuple(tuple(sol[i * q + k] for k in range(q))
                           for i in range(p)))


def sandwich_kernel_basis(U: Mat, V: Mat, R: Mat, p: int, q: int) -> list[Mat]:
    """Basis of the lattice {X (p x q) : U @ X @ V = 0 mod col span R}.

    U is m x p, V is q x n, R is m x r. Returns a list of p x q matrices.
    """
    m, n = U.rows, V.cols
    assert U.cols == p and V.rows == q and R.rows == m
    nunk = p * q + R.cols * n
    rows = []
    for j in range(n):
        for i in range(m):
            row = [0] * nunk
            for a in range(p):
                for b in range(q):
                    row[a * q + b] = row[a * q + b] + U.data[i][a] * V.data[b][j]
            for rr in range(R.cols):
                row[p * q + j * R.cols + rr] = R.data[i][rr]
            rows.append(row)
    K = kernel_basis(Mat.from_rows(rows, nunk))
    out = []
    seen = set()
    for jc in range(K.cols):
        v = K.col(jc)
        X = Mat(p, q, tuple(tuple(v[a * q + b] for b in range(q))
                            for a in range(p)))
        if not X.is_zero() and X.data not in seen:
            seen.add(X.data)
            out.append(X)
    return out


def block_kernel_basis(shapes: list[tuple[int, int]],
                       equations) -> list[list[Mat]]:
    """Basis of the lattice of matrix tuples satisfying joint constraints.

    ``shapes[k]`` is the (rows, cols) shape of the k-th unknown X_k.
    Each equation is a pair (terms, R): terms is a list of (k, U, V)
    triples meaning the summand U @ X_k @ V, all summands sharing one
    m x n shape, and the equation reads  sum of terms = 0 modulo the
    column span of R (R is m x r; pass a zero-column Mat for an exact
    equation).  Returns a basis of solution tuples.
    """
    offsets = []
    pos = 0
    for p, q in shapes:
        offsets.append(pos)
        pos += p * q
    nx = pos
    # relation unknowns: one vector per equation column
    rel_offsets = []
    for terms, R in equations:
        m, n = _equation_shape(shapes, terms, R)
        rel_offsets.append(pos)
        pos += R.cols * n
    nunk = pos

    rows = []
    for e, (terms, R) in enumerate(equations):
        m, n = _equation_shape(shapes, terms, R)
        for j in range(n):
            for i in range(m):
                row = [0] * nunk
                for k, U, V in terms:
                    p, q = shapes[k]
                    base = offsets[k]
                    for a in range(p):
                        ua = U.data[i][a]
                        if ua == 0:
                            continue
                        for b in range(q):
                            row[base + a * q + b] += ua * V.data[b][j]
                for rr in range(R.cols):
                    row[rel_offsets[e] + j * R.cols + rr] = R.data[i][rr]
                rows.append(row)
    big = kernel_basis(Mat.from_rows(rows, nunk)) if rows else \
        Mat.identity(nunk)
    # project to the X coordinates; rebuild a canonical basis there
    proj = big.submatrix(range(nx), range(big.cols))
    lat = hnf_basis(proj)
    out = []
    for jc in range(lat.cols):
        v = lat.col(jc)
        tup = []
        for k, (p, q) in enumerate(shapes):
            base = offsets[k]
            tup.append(Mat(p, q, tuple(tuple(v[base + a * q + b]
                                             for b in range(q))
                                       for a in range(p))))
        out.append(tup)
    return out


def _equation_shape(shapes, terms, R):
    k0, U0, V0 = terms[0]
    m, n = U0.rows, V0.cols
    for k, U, V in terms:
        p, q = shapes[k]
        assert U.rows == m and V.cols == n, "summand shape mismatch"
        assert U.cols == p and V.rows == q, "term does not fit unknown"
    assert R.rows == m, "relation shape mismatch"
    return m, n
