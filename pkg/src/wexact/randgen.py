"""Seeded random generators for the abelian-group instance.

The verification suites need inputs that satisfy non-trivial hypotheses
(short exact rows, commuting squares, d^2 = 0, ...).  Qualifying data is
measure zero under naive sampling, so everything here is built top-down:
hypotheses hold by construction and the randomness lives in the degrees
of freedom that remain.  The one general tool is the integer solution
lattice of a joint linear system over several unknown matrices
(``block_kernel_basis``); a random point of that lattice is a random
datum satisfying all the constraints at once.
"""

from __future__ import annotations

import random

from .engine import SnakeDiagram
from .fgab import (FGAB, AbMorphism, FpAbelianGroup, fp_group, free_group,
                   minimize, morphism)
from .intlinalg import Mat, block_kernel_basis


class FgAbSampler:
    """Seeded source of axiom/diagram data over fp abelian groups."""

    def __init__(self, seed: int = 0, max_rank: int = 3, max_entry: int = 5):
        self.rng = random.Random(seed)
        self.max_rank = max_rank
        self.max_entry = max_entry
        self.cat = FGAB

    # -- scalars and plain objects ----------------------------------------

    def _entry(self) -> int:
        return self.rng.randint(-self.max_entry, self.max_entry)

    def _coeff(self) -> int:
        return self.rng.randint(-2, 2)

    def random_group(self) -> FpAbelianGroup:
        n = self.rng.randint(0, self.max_rank)
        r = self.rng.randint(0, n + 1)
        rels = Mat.from_rows([[self._entry() for _ in range(r)]
                              for _ in range(n)], r)
        return fp_group(n, rels)

    def hom_lattice(self, A: FpAbelianGroup, B: FpAbelianGroup):
        """Basis of the lattice of matrices defining morphisms A -> B."""
        shape = (B.n_generators, A.n_generators)
        eq = ([(0, Mat.identity(B.n_generators), A.relations)], B.relations)
        return [t[0] for t in block_kernel_basis([shape], [eq])]

    def random_morphism(self, A=None, B=None) -> AbMorphism:
        A = A or self.random_group()
        B = B or self.random_group()
        M = Mat.zero(B.n_generators, A.n_generators)
        for basis_mat in self.hom_lattice(A, B):
            c = self._coeff()
            if c:
                M = M + basis_mat.scale(c)
        return AbMorphism(A, B, M)

    # -- structured morphisms ----------------------------------------------

    def random_deflation(self, source=None) -> AbMorphism:
        if source is None and self.rng.random() < 0.5:
            return self.deflation_onto(self.random_group())
        f = self.random_morphism(A=source)
        return self.cat.admissible_factorization(f).deflation_part

    def deflation_onto(self, C: FpAbelianGroup) -> AbMorphism:
        """A deflation with the prescribed target, from a fattened source."""
        R = self.random_group()
        S, ia, ib, pa, pb = self.cat.direct_sum(C, R)
        Sm, to_min, from_min = minimize(S)
        return self.cat.compose(pa, from_min)

    def random_inflation_into(self, B: FpAbelianGroup) -> AbMorphism:
        f = self.random_morphism(B=B)
        return self.cat.admissible_factorization(f).inflation_part

    def random_isomorphism(self) -> AbMorphism:
        G = self.random_group()
        Gm, to_min, from_min = minimize(G)
        signs = Mat(Gm.n_generators, Gm.n_generators,
                    tuple(tuple((self.rng.choice((1, -1)) if i == j else 0)
                                for j in range(Gm.n_generators))
                          for i in range(Gm.n_generators)))
        flip = AbMorphism(Gm, Gm, signs)
        pick = self.rng.randrange(3)
        if pick == 0:
            return self.cat.compose(flip, to_min)
        if pick == 1:
            return self.cat.compose(from_min, flip)
        return self.cat.identity(G)

    def random_ses(self, middle=None):
        """(i, p) short exact with a random middle object."""
        B = middle or self.random_group()
        i = self.random_inflation_into(B)
        C, p = self.cat.cokernel(i)
        return i, p

    # -- axiom samplers ------------------------------------------------------

    def random_deflation_pair(self):
        f = self.random_deflation()
        g = self.random_deflation(source=f.target)
        return f, g

    def random_axiom3_candidate(self):
        f = self.random_deflation()
        g = self.random_morphism(A=f.target)
        return f, g

    def random_axiom4_grid(self):
        """Rows + deflation verticals of a qualifying kernel-row grid."""
        cat = self.cat
        B2 = self.random_group()
        phi1p, phi2p = self.random_ses(middle=B2)
        g2 = cat.admissible_factorization(self.random_morphism(A=B2)
                                          ).deflation_part
        fac = cat.admissible_factorization(cat.compose(g2, phi1p))
        g1, phi1pp = fac.deflation_part, fac.inflation_part
        C3, phi2pp = cat.cokernel(phi1pp)
        from .core import cokernel_colift
        g3 = cokernel_colift(cat, phi1p, phi2p, cat.compose(phi2pp, g2))
        return phi1p, phi2p, phi1pp, phi2pp, g1, g2, g3

    def random_cotarget_deflations(self):
        C = self.random_group()
        return self.deflation_onto(C), self.deflation_onto(C)

    def random_axiom4b_data(self):
        """(phi2, phi2p, f2) with both deflations sharing a target and
        phi2 = phi2p @ f2; half the time f2 is itself a deflation, half
        the time it misses a complement (so f1 must come out non-defl)."""
        cat = self.cat
        A3 = self.random_group()
        if self.rng.random() < 0.5:
            phi2p = self.deflation_onto(A3)
            f2 = self.deflation_onto(phi2p.source)
        else:
            R = self.random_group()
            S, ia, ib, pa, pb = cat.direct_sum(A3, R)
            phi2p = pa
            q = self.deflation_onto(A3)
            f2 = cat.compose(ia, q)
        phi2 = cat.compose(phi2p, f2)
        return phi2, phi2p, f2

    # -- snake diagrams ------------------------------------------------------

    def random_snake_diagram(self) -> SnakeDiagram:
        """Short exact rows plus admissible verticals with commuting
        squares; f2 is a random point of the constraint lattice and f1,
        f3 are the induced (unique) fill-ins."""
        cat = self.cat
        phi1, phi2 = self.random_ses()
        phi1p, phi2p = self.random_ses()
        A2, B2 = phi1.target, phi1p.target
        B3 = phi2p.target
        shape = (B2.n_generators, A2.n_generators)
        eqs = [
            ([(0, Mat.identity(B2.n_generators), A2.relations)],
             B2.relations),
            ([(0, phi2p.matrix, phi1.matrix)], B3.relations),
        ]
        M = Mat.zero(*shape)
        for (basis_mat,) in block_kernel_basis([shape], eqs):
            c = self._coeff()
            if c:
                M = M + basis_mat.scale(c)
        f2 = AbMorphism(A2, B2, M)
        f1 = cat.lift_through_mono(phi1p, cat.compose(f2, phi1))
        f3 = cat.colift_through_epi(phi2, cat.compose(phi2p, f2))
        return SnakeDiagram(
            phi1=phi1, phi2=phi2, phi1p=phi1p, phi2p=phi2p,
            f1=cat.admissible_factorization(f1),
            f2=cat.admissible_factorization(f2),
            f3=cat.admissible_factorization(f3))

    def snake_endomorphism_lattice(self, d: SnakeDiagram):
        """Basis of endomorphisms (a1, a2, a3, b1, b2, b3) of a snake
        diagram: six maps commuting with both rows and all verticals."""
        objs = [d.phi1.source, d.phi1.target, d.phi2.target,
                d.phi1p.source, d.phi1p.target, d.phi2p.target]
        shapes = [(G.n_generators, G.n_generators) for G in objs]
        ident = [Mat.identity(G.n_generators) for G in objs]
        eqs = []
        for k, G in enumerate(objs):
            eqs.append(([(k, ident[k], G.relations)], G.relations))

        def commute(row_map, src_idx, dst_idx):
            target_rels = objs[dst_idx].relations
            eqs.append((
                [(dst_idx, ident[dst_idx].scale(-1), row_map.matrix),
                 (src_idx, row_map.matrix, ident[src_idx])],
                target_rels))

        commute(d.phi1, 0, 1)
        commute(d.phi2, 1, 2)
        commute(d.phi1p, 3, 4)
        commute(d.phi2p, 4, 5)
        for k, f in ((0, d.f1.f), (1, d.f2.f), (2, d.f3.f)):
            # b f = f a  <=>  f a - b f = 0 in the target of f
            eqs.append((
                [(k, f.matrix, ident[k]),
                 (k + 3, ident[k + 3].scale(-1), f.matrix)],
                f.target.relations))
        return objs, block_kernel_basis(shapes, eqs)

    def random_snake_endomorphism(self, d: SnakeDiagram):
        objs, basis = self.snake_endomorphism_lattice(d)
        mats = [Mat.zero(G.n_generators, G.n_generators) for G in objs]
        for tup in basis:
            c = self._coeff()
            if c:
                mats = [m + t.scale(c) for m, t in zip(mats, tup)]
        return [AbMorphism(G, G, m) for G, m in zip(objs, mats)]

    # -- chains ----------------------------------------------------------------

    def random_free_complex(self, length: int, max_rank: int | None = None):
        """Objects and differentials of a free complex: a list of free
        groups and square-zero connecting maps, built left to right by
        sampling each differential from the kernel lattice of its
        predecessor."""
        max_rank = max_rank or self.max_rank
        ranks = [self.rng.randint(0, max_rank) for _ in range(length)]
        groups = [free_group(n) for n in ranks]
        diffs = []
        prev = None
        for k in range(length - 1):
            p, q = ranks[k + 1], ranks[k]
            if prev is None or prev.matrix.rows == 0:
                M = Mat.from_rows([[self._entry() for _ in range(q)]
                                   for _ in range(p)], q)
            else:
                shape = (p, q)
                eqs = [([(0, Mat.identity(p), prev.matrix)],
                        Mat(p, 0, tuple(() for _ in range(p))))]
                M = Mat.zero(p, q)
                for (b,) in block_kernel_basis([shape], eqs):
                    c = self._coeff()
                    if c:
                        M = M + b.scale(c)
            prev = morphism(groups[k], groups[k + 1],
                            [list(r) for r in M.data])
            diffs.append(prev)
        return groups, diffs

    def random_pointwise_ses_of_complexes(self, length: int):
        """A pointwise-split-objects extension of free complexes: the
        middle complex is A_i (+) A''_i with a block-triangular
        differential, so every level is short exact by construction
        while the middle differential is a genuinely twisted extension.

        Returns (A, B, Add, inclusions, projections) where A/B/Add are
        (groups, diffs) pairs.
        """
        cat = self.cat
        A_groups, A_diffs = self.random_free_complex(length)
        C_groups, C_diffs = self.random_free_complex(length)
        n = [G.n_generators for G in A_groups]
        m = [G.n_generators for G in C_groups]
        # twists h_k: C_k -> A_{k+1} with d^A h_k + h_{k+1} d^C_k = 0
        shapes = [(n[k + 1], m[k]) for k in range(length - 1)]
        eqs = []
        for k in range(length - 2):
            rows = n[k + 2]
            zero_rel = Mat(rows, 0, tuple(() for _ in range(rows)))
            eqs.append((
                [(k, A_diffs[k + 1].matrix, Mat.identity(m[k])),
                 (k + 1, Mat.identity(n[k + 2]), C_diffs[k].matrix)],
                zero_rel))
        twists = [Mat.zero(*s) for s in shapes]
        if shapes:
            for tup in block_kernel_basis(shapes, eqs):
                c = self._coeff()
                if c:
                    twists = [t + u.scale(c) for t, u in zip(twists, tup)]
        B_groups, incls, projs, B_diffs = [], [], [], []
        for k in range(length):
            S, ia, ib, pa, pb = cat.direct_sum(A_groups[k], C_groups[k])
            B_groups.append(S)
            incls.append(ia)
            projs.append(pb)
        for k in range(length - 1):
            # d^B = ia' d^A pa + ia' h pb + ib' d^C pb  (block triangular)
            Sk, Sk1 = B_groups[k], B_groups[k + 1]
            top = A_diffs[k].matrix.hstack(twists[k])
            bot = Mat.zero(m[k + 1], n[k]).hstack(C_diffs[k].matrix)
            B_diffs.append(morphism(Sk, Sk1,
                                    [list(r) for r in top.vstack(bot).data]))
        return ((A_groups, A_diffs), (B_groups, B_diffs),
                (C_groups, C_diffs), incls, projs)
