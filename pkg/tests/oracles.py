"""Independent oracles for the test suite.

Everything here recomputes answers by a different route than the library
under test: the connecting morphism by an explicit element chase on
generators, homology by a self-contained Smith reduction over the raw
boundary matrices, and homotopy classes of chain maps by brute-force
enumeration.  None of it calls the categorical engine.
"""

from __future__ import annotations

from fractions import Fraction

from wexact.fgab import AbMorphism
from wexact.intlinalg import Mat, solve_mod


# -- element-chase connecting morphism ---------------------------------------

def chase_delta(d) -> AbMorphism:
    """delta: K3 -> C1 for an fgab snake diagram, computed one generator
    at a time by the textbook chase: lift along the bottom-right
    deflation, push down the middle vertical, pull back along the
    top-left inflation, project to the cokernel.

    K3 and C1 are the diagram's own canonical presentations
    (d.f3.kernel_object and d.f1.cokernel_object), so the result is
    directly comparable with the engine's delta via cat.equal.
    """
    k3 = d.f3.kernel              # K3 -> A3
    c1 = d.f1.cokernel            # B1 -> C1
    A3, B2 = d.phi2.target, d.phi1p.target
    cols = []
    for j in range(k3.source.n_generators):
        a3 = k3.matrix.col(j)
        x = solve_mod(d.phi2.matrix, A3.relations, a3)
        if x is None:
            raise AssertionError("chase: generator does not lift along phi2")
        b2 = (d.f2.f.matrix @ Mat.from_cols([x])).col(0)
        y = solve_mod(d.phi1p.matrix, B2.relations, b2)
        if y is None:
            raise AssertionError("chase: image does not pull back along phi1p")
        cols.append((c1.matrix @ Mat.from_cols([y])).col(0))
    M = Mat.from_cols(cols, nrows=c1.target.n_generators)
    return AbMorphism(k3.source, c1.target, M)


# -- straight Smith-form homology --------------------------------------------

def _smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form, by direct row/column
    reduction on a copy of the matrix.  Self-contained on purpose."""
    M = [list(r) for r in rows]
    m = len(M)
    n = len(M[0]) if m else 0
    diag = []
    top = 0
    while top < min(m, n):
        # find a pivot of least absolute value
        best = None
        for i in range(top, m):
            for j in range(top, n):
                if M[i][j] and (best is None
                                or abs(M[i][j]) < abs(M[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        M[top], M[i] = M[i], M[top]
        for r in range(m):
            M[r][top], M[r][j] = M[r][j], M[r][top]
        done = True
        for i in range(m):
            if i != top and M[i][top]:
                q = M[i][top] // M[top][top]
                for j in range(n):
                    M[i][j] -= q * M[top][j]
                if M[i][top]:
                    done = False
        for j in range(n):
            if j != top and M[top][j]:
                q = M[top][j] // M[top][top]
                for i in range(m):
                    M[i][j] -= q * M[i][top]
                if M[top][j]:
                    done = False
        if not done:
            continue
        # pivot must divide the rest of the block for the chain condition
        stray = None
        for i in range(top + 1, m):
            for j in range(top + 1, n):
                if M[i][j] % M[top][top]:
                    stray = i
                    break
            if stray is not None:
                break
        if stray is not None:
            for j in range(n):
                M[top][j] += M[stray][j]
            continue
        diag.append(abs(M[top][top]))
        top += 1
    return diag


def _rank(rows: list[list[int]]) -> int:
    """Rank over Q by fraction-free elimination."""
    M = [[Fraction(x) for x in r] for r in rows]
    m = len(M)
    n = len(M[0]) if m else 0
    rank = 0
    col = 0
    while rank < m and col < n:
        piv = next((i for i in range(rank, m) if M[i][col]), None)
        if piv is None:
            col += 1
            continue
        M[rank], M[piv] = M[piv], M[rank]
        for i in range(rank + 1, m):
            if M[i][col]:
                f = M[i][col] / M[rank][col]
                for j in range(col, n):
                    M[i][j] -= f * M[rank][j]
        rank += 1
        col += 1
    return rank


def homology_of_free_chain_complex(ranks: list[int],
                                   boundaries: list[list[list[int]]]):
    """H_i of a homological chain complex C_top -> ... -> C_0 of free
    groups, given generator counts ranks[i] = rk C_i (i ascending) and
    boundary matrices boundaries[i] : C_{i+1} -> C_i as row-major
    integer lists (ranks[i] rows by ranks[i+1] columns).

    Returns, per degree i, (free_rank, [torsion coefficients > 1]) from
    the classical formula: rk H_i = n_i - rank d_i - rank d_{i+1} and
    the torsion of H_i is the part of the Smith diagonal of d_{i+1}
    exceeding 1.
    """
    top = len(ranks) - 1
    r = []                 # r[i] = rank of d_{i+1}: C_{i+1} -> C_i
    for i in range(top):
        r.append(_rank(boundaries[i]) if ranks[i] and ranks[i + 1] else 0)
    r.append(0)
    out = []
    for i in range(top + 1):
        below = r[i - 1] if i > 0 else 0
        free = ranks[i] - below - r[i]
        if i < top and ranks[i] and ranks[i + 1]:
            tors = [d for d in _smith_diagonal(boundaries[i]) if d > 1]
        else:
            tors = []
        out.append((free, sorted(tors)))
    return out


# -- brute-force homotopy classes --------------------------------------------

def homotopy_classes_two_term(d: int, bound: int = 3):
    """Degree-0 chain self-maps of the two-term complex Z --d--> Z
    (cohomological degrees 0 and 1), enumerated with components in
    [-bound, bound], partitioned into homotopy classes by brute force.

    A chain map is a pair (f0, f1) with f1 * d = d * f0; a homotopy is
    one integer h : degree 1 -> degree 0 and shifts (f0, f1) by
    (h * d, d * h).  Returns the set of canonical representatives.
    """
    maps = [(f0, f1)
            for f0 in range(-bound, bound + 1)
            for f1 in range(-bound, bound + 1)
            if f1 * d == d * f0]
    hs = range(-4 * bound, 4 * bound + 1)

    def homotopic(a, b):
        return any((a[0] - b[0], a[1] - b[1]) == (h * d, d * h) for h in hs)

    classes: list[list[tuple[int, int]]] = []
    for f in maps:
        for cls in classes:
            if homotopic(f, cls[0]):
                cls.append(f)
                break
        else:
            classes.append([f])
    return {min(cls) for cls in classes}
