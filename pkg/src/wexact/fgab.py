"""Finitely presented abelian groups as integer matrices.

A group is ``Z^n / colspan(relations)``; a morphism ``A -> B`` is an integer
matrix (``B`` generators x ``A`` generators), well defined when it maps the
relation lattice of ``A`` into the relation lattice of ``B``.  Two matrices
give the same morphism when their difference lands columnwise in the target
relation lattice; this and every other decision here reduces to Hermite
normal form solving, never floats.

Relations are stored in canonical column HNF, so object equality is
presentation equality.  Kernels, cokernels and images are minimized through
Smith normal form, keeping outputs deterministic and small.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import CategoryInstance
from .intlinalg import (Mat, hnf, hnf_basis, in_span, invariant_factors,
                        kernel_basis, snf, solve, solve_mod, solve_transform)


@dataclass(frozen=True)
class FpAbelianGroup:
    n_generators: int
    relations: Mat  # n_generators rows, canonical HNF columns

    def __str__(self):
        return format_group(self)


@dataclass(frozen=True)
class AbMorphism:
    source: FpAbelianGroup
    target: FpAbelianGroup
    matrix: Mat  # target gens x source gens


def fp_group(n: int, relations=None) -> FpAbelianGroup:
    """Canonical constructor; relations may be a Mat or column list."""
    if relations is None:
        rel = Mat.zero(n, 0)
    elif isinstance(relations, Mat):
        rel = relations
    else:
        rel = Mat.from_cols([tuple(c) for c in relations], n)
    assert rel.rows == n
    return FpAbelianGroup(n, hnf_basis(rel))


def free_group(rank: int) -> FpAbelianGroup:
    return fp_group(rank)


def cyclic_group(order: int) -> FpAbelianGroup:
    return fp_group(1, [[order]])


ZERO_GROUP = fp_group(0)


def morphism(source, target, rows) -> AbMorphism:
    m = rows if isinstance(rows, Mat) else Mat.from_rows(
        [list(r) for r in rows], source.n_generators)
    assert m.rows == target.n_generators and m.cols == source.n_generators
    return AbMorphism(source, target, m)


def decomposition(G: FpAbelianGroup) -> tuple[int, list[int]]:
    """(free rank, invariant factors > 1)."""
    facs = invariant_factors(G.relations)
    return G.n_generators - len(facs), [d for d in facs if d != 1]


def is_trivial(G: FpAbelianGroup) -> bool:
    rank, torsion = decomposition(G)
    return rank == 0 and not torsion


def format_group(G: FpAbelianGroup) -> str:
    rank, torsion = decomposition(G)
    parts = []
    if rank == 1:
        parts.append("Z")
    elif rank > 1:
        parts.append(f"Z^{rank}")
    parts.extend(f"Z/{d}" for d in torsion)
    return " (+) ".join(parts) if parts else "0"


def unimodular_inverse(U: Mat) -> Mat:
    H, V = hnf(U)
    assert H == Mat.identity(U.rows), "matrix is not unimodular"
    return V


def minimize(G: FpAbelianGroup):
    """SNF-minimal presentation of G with the isos to and from it.

    Returns (G_min, to_min: G -> G_min, from_min: G_min -> G).
    """
    n = G.n_generators
    D, S, T = snf(G.relations)
    diag = [D.data[i][i] if i < D.cols else 0 for i in range(n)]
    keep = [i for i in range(n) if diag[i] != 1]
    rel_cols = []
    for pos, i in enumerate(keep):
        if diag[i] != 0:
            col = [0] * len(keep)
            col[pos] = diag[i]
            rel_cols.append(col)
    Gmin = fp_group(len(keep), rel_cols)
    Sinv = unimodular_inverse(S)
    to_min = AbMorphism(G, Gmin, S.submatrix(keep, range(n)))
    from_min = AbMorphism(Gmin, G, Sinv.submatrix(range(n), keep))
    return Gmin, to_min, from_min


class FgAbInstance(CategoryInstance):
    """The additive, fully computable instance of the interface.

    Deflations are the surjections; every morphism is admissible and every
    surjection is the cokernel of its kernel, so all axioms (and the
    pullback axioms) hold.  Kernels and cokernels exist for arbitrary
    morphisms, not just where the axioms demand them.
    """

    zero_object = ZERO_GROUP

    # --- basics -----------------------------------------------------------
    def identity(self, A):
        return AbMorphism(A, A, Mat.identity(A.n_generators))

    def compose(self, g, f):
        assert f.target == g.source, "morphisms not composable"
        return AbMorphism(f.source, g.target, g.matrix @ f.matrix)

    def equal(self, f, g):
        if f.source != g.source or f.target != g.target:
            return False
        diff = f.matrix - g.matrix
        R = f.target.relations
        return all(in_span(R, diff.col(j)) for j in range(diff.cols))

    def well_defined(self, f) -> bool:
        img = f.matrix @ f.source.relations
        R = f.target.relations
        return all(in_span(R, img.col(j)) for j in range(img.cols))

    def to_zero(self, A):
        return AbMorphism(A, ZERO_GROUP, Mat.zero(0, A.n_generators))

    def from_zero(self, B):
        return AbMorphism(ZERO_GROUP, B, Mat.zero(B.n_generators, 0))

    # --- deflations, kernels, cokernels ------------------------------------
    def is_deflation(self, f):
        # surjectivity: the cokernel presentation is trivial
        aug = f.target.relations.hstack(f.matrix)
        facs = invariant_factors(aug)
        return len(facs) == f.target.n_generators and all(
            d == 1 for d in facs)

    def is_isomorphism(self, f):
        if not self.is_deflation(f):
            return False
        K, _ = self.kernel(f)
        return is_trivial(K)

    def kernel(self, f):
        """(K, k) with K minimized; k the inclusion of {x : f(x) = 0}."""
        A, B = f.source, f.target
        aug = f.matrix.hstack(B.relations)
        kb = kernel_basis(aug)
        lat = kb.submatrix(range(A.n_generators), range(kb.cols))
        G = hnf_basis(lat.hstack(A.relations))
        # relations of the kernel: z with G z inside relation lattice of A
        kb2 = kernel_basis(G.hstack(A.relations))
        relz = kb2.submatrix(range(G.cols), range(kb2.cols))
        Kraw = fp_group(G.cols, hnf_basis(relz))
        kraw = AbMorphism(Kraw, A, G)
        Kmin, _, from_min = minimize(Kraw)
        return Kmin, self.compose(kraw, from_min)

    def cokernel(self, f):
        """(C, c) with C minimized; c the projection of target(f)."""
        B = f.target
        Craw = fp_group(B.n_generators, B.relations.hstack(f.matrix))
        Cmin, to_min, _ = minimize(Craw)
        return Cmin, AbMorphism(B, Cmin, to_min.matrix)

    # --- universal-property solvers ----------------------------------------
    def lift_through_mono(self, m, g):
        if m.target != g.target:
            return None
        cols = []
        for j in range(g.matrix.cols):
            x = solve_mod(m.matrix, m.target.relations, g.matrix.col(j))
            if x is None:
                return None
            cols.append(x)
        u = AbMorphism(g.source, m.source,
                       Mat.from_cols(cols, m.source.n_generators))
        if not self.well_defined(u) or not self.equal(self.compose(m, u), g):
            return None
        return u

    def colift_through_epi(self, e, g):
        if e.source != g.source:
            return None
        C, T = e.target, g.target
        cols = []
        for j in range(C.n_generators):
            unit = [1 if i == j else 0 for i in range(C.n_generators)]
            b = solve_mod(e.matrix, C.relations, unit)
            if b is None:
                cols = None
                break
            cols.append((g.matrix @ Mat.from_cols([b], e.source.n_generators)
                         ).col(0))
        if cols is not None:
            v = AbMorphism(C, T, Mat.from_cols(cols, T.n_generators))
            if self.well_defined(v) and self.equal(self.compose(v, e), g):
                return v
        # fall back to solving v @ e = g as one linear system
        X = solve_transform(e.matrix, g.matrix, T.relations)
        if X is None:
            return None
        v = AbMorphism(C, T, X)
        if self.well_defined(v) and self.equal(self.compose(v, e), g):
            return v
        return None

    # --- optional capabilities ---------------------------------------------
    def admissible_factorization(self, f):
        """Image factorization with all SES witnesses attached."""
        from .core import AdmissibleFactorization  # placed there for sharing
        A, B = f.source, f.target
        L = hnf_basis(f.matrix.hstack(B.relations))
        kb = kernel_basis(L.hstack(B.relations))
        relz = kb.submatrix(range(L.cols), range(kb.cols))
        Iraw = fp_group(L.cols, hnf_basis(relz))
        firaw = AbMorphism(Iraw, B, L)  # inclusion
        cols = []
        for j in range(A.n_generators):
            z = solve(L.hstack(B.relations), f.matrix.col(j))
            assert z is not None
            cols.append(z[:L.cols])
        fdraw = AbMorphism(A, Iraw, Mat.from_cols(cols, L.cols))
        Imin, to_min, from_min = minimize(Iraw)
        f_defl = self.compose(to_min, fdraw)
        f_infl = self.compose(firaw, from_min)
        K, k = self.kernel(f_defl)
        C, c = self.cokernel(f_infl)
        return AdmissibleFactorization(
            f=f, deflation_part=f_defl, inflation_part=f_infl,
            image=Imin, kernel_object=K, kernel=k,
            cokernel_object=C, cokernel=c)

    def direct_sum(self, A, B):
        n, m = A.n_generators, B.n_generators
        rel = (A.relations.hstack(Mat.zero(n, B.relations.cols))).vstack(
            Mat.zero(m, A.relations.cols).hstack(B.relations))
        S = fp_group(n + m, rel)
        ia = AbMorphism(A, S, Mat.identity(n).vstack(Mat.zero(m, n)))
        ib = AbMorphism(B, S, Mat.zero(n, m).vstack(Mat.identity(m)))
        pa = AbMorphism(S, A, Mat.identity(n).hstack(Mat.zero(n, m)))
        pb = AbMorphism(S, B, Mat.zero(m, n).hstack(Mat.identity(m)))
        return S, ia, ib, pa, pb

    def pullback_of_deflation(self, p, f):
        """Pullback of deflation p: B2 -> B3 along f: A3 -> B3.

        Returns a Pullback with projections and a mediator; the projection
        on the f side is a deflation with kernel isomorphic to ker(p).
        """
        from .core import Pullback
        assert p.target == f.target
        assert self.is_deflation(p), "p must be a deflation"
        S, iB, iA, pB, pA = self.direct_sum(p.source, f.source)
        diff = AbMorphism(S, p.target,
                          p.matrix.hstack(f.matrix.scale(-1)))
        P, incl = self.kernel(diff)
        pr_left = self.compose(pB, incl)
        pr_right = self.compose(pA, incl)

        def mediate(u, v):
            assert u.target == p.source and v.target == f.source
            assert u.source == v.source
            pair = AbMorphism(u.source, S, u.matrix.vstack(v.matrix))
            med = self.lift_through_mono(incl, pair)
            if med is None:
                return None
            return med

        return Pullback(P, pr_left, pr_right, mediate)

    def add(self, f, g):
        assert f.source == g.source and f.target == g.target
        return AbMorphism(f.source, f.target, f.matrix + g.matrix)

    def negate(self, f):
        return AbMorphism(f.source, f.target, f.matrix.scale(-1))

    def scale(self, f, k: int):
        return AbMorphism(f.source, f.target, f.matrix.scale(k))


FGAB = FgAbInstance()


@dataclass(frozen=True)
class HomGroup:
    """Hom(Z^m, Z^n) = Z^(n*m); entry (i, j) of a matrix sits at i*m + j."""
    source: FpAbelianGroup
    target: FpAbelianGroup
    group: FpAbelianGroup

    def encode(self, f: AbMorphism) -> tuple[int, ...]:
        assert f.source == self.source and f.target == self.target
        return tuple(x for row in f.matrix.data for x in row)

    def decode(self, vec) -> AbMorphism:
        m = self.source.n_generators
        n = self.target.n_generators
        vec = list(vec)
        assert len(vec) == m * n
        return AbMorphism(self.source, self.target,
                          Mat(n, m, tuple(tuple(vec[i * m + j]
                                                for j in range(m))
                                          for i in range(n))))


def hom_group(A: FpAbelianGroup, B: FpAbelianGroup) -> HomGroup:
    """Hom of free groups only; raises for non-free input."""
    if A.relations.cols or B.relations.cols:
        raise ValueError("hom_group requires free source and target")
    return HomGroup(A, B, free_group(A.n_generators * B.n_generators))
