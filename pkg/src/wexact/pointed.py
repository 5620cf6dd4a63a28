"""Finite pointed sets: the small, non-additive, exhaustively enumerable
instance.

Objects are ``{0, .., size-1}`` with 0 the basepoint; maps are lookup
tables fixing 0.  The zero object is the one-point set.  Kernels are
basepoint-fiber inclusions and cokernels collapse the image, so both are
total operations even though the category is far from abelian.

The deflation class is a *proposal*: f is a deflation iff it is surjective
and injective outside f^-1(0) (a "kernel-collapse" map).  Whether this
class satisfies the weakly exact axioms is decided empirically by
``engine.verify_axioms`` over all small objects; the alternative class
"all surjections" is kept around because it demonstrably fails axiom 1
(the fold map on a 3-element set is surjective but not the cokernel of
its kernel).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .core import CategoryInstance


@dataclass(frozen=True)
class PointedSet:
    size: int

    def __post_init__(self):
        if self.size < 1:
            raise ValueError("a pointed set needs at least the basepoint")

    def __str__(self):
        return f"P{self.size}"


@dataclass(frozen=True)
class PointedMap:
    source: PointedSet
    target: PointedSet
    table: tuple[int, ...]

    def __post_init__(self):
        if len(self.table) != self.source.size:
            raise ValueError("table length mismatch")
        if self.table[0] != 0:
            raise ValueError("basepoint not preserved")
        if any(not 0 <= v < self.target.size for v in self.table):
            raise ValueError("table value out of range")

    def __call__(self, x: int) -> int:
        return self.table[x]


def pointed_set(size: int) -> PointedSet:
    return PointedSet(size)


def pointed_map(source: PointedSet, target: PointedSet, table) -> PointedMap:
    return PointedMap(source, target, tuple(table))


ZERO_SET = PointedSet(1)

INJECTIVE_OFF_KERNEL = "injective-off-kernel"
ALL_SURJECTIONS = "all-surjections"


class PointedSetsInstance(CategoryInstance):
    """Capability record for finite pointed sets.

    ``deflation_class`` selects which maps count as deflations; the
    default proposal is arbitrated by the axiom verifier.
    """

    zero_object = ZERO_SET

    def __init__(self, deflation_class: str = INJECTIVE_OFF_KERNEL):
        if deflation_class not in (INJECTIVE_OFF_KERNEL, ALL_SURJECTIONS):
            raise ValueError(f"unknown deflation class {deflation_class!r}")
        self.deflation_class = deflation_class

    # --- plumbing ---------------------------------------------------------

    def identity(self, A: PointedSet) -> PointedMap:
        return PointedMap(A, A, tuple(range(A.size)))

    def compose(self, g: PointedMap, f: PointedMap) -> PointedMap:
        if f.target != g.source:
            raise ValueError("not composable")
        return PointedMap(f.source, g.target,
                          tuple(g.table[v] for v in f.table))

    def equal(self, f: PointedMap, g: PointedMap) -> bool:
        return f == g

    def to_zero(self, A: PointedSet) -> PointedMap:
        return PointedMap(A, ZERO_SET, (0,) * A.size)

    def from_zero(self, B: PointedSet) -> PointedMap:
        return PointedMap(ZERO_SET, B, (0,))

    # --- structure --------------------------------------------------------

    def is_deflation(self, f: PointedMap) -> bool:
        surjective = set(f.table) == set(range(f.target.size))
        if not surjective:
            return False
        if self.deflation_class == ALL_SURJECTIONS:
            return True
        off_kernel = [v for v in f.table if v != 0]
        return len(off_kernel) == len(set(off_kernel))

    def is_isomorphism(self, f: PointedMap) -> bool:
        return (f.source.size == f.target.size
                and len(set(f.table)) == f.source.size)

    def kernel(self, f: PointedMap):
        """Inclusion of f^-1(0), elements in increasing order."""
        fiber = [x for x in range(f.source.size) if f.table[x] == 0]
        K = PointedSet(len(fiber))
        return K, PointedMap(K, f.source, tuple(fiber))

    def cokernel(self, f: PointedMap):
        """Collapse the image to the basepoint, order-preserving renumber."""
        image = set(f.table)
        survivors = [y for y in range(f.target.size) if y not in image]
        C = PointedSet(1 + len(survivors))
        relabel = {y: 0 for y in image}
        for idx, y in enumerate(survivors, start=1):
            relabel[y] = idx
        return C, PointedMap(f.target, C,
                             tuple(relabel[y] for y in range(f.target.size)))

    def lift_through_mono(self, m: PointedMap, g: PointedMap):
        """u with m @ u = g, if one exists.  m need not be injective; we
        pick the least preimage and verify, returning None on failure."""
        preimage = {}
        for x in range(m.source.size - 1, -1, -1):
            preimage[m.table[x]] = x
        try:
            u = PointedMap(g.source, m.source,
                           tuple(preimage[g.table[w]]
                                 for w in range(g.source.size)))
        except (KeyError, ValueError):
            return None
        if self.compose(m, u) != g:
            return None
        return u

    def colift_through_epi(self, e: PointedMap, g: PointedMap):
        """v with v @ e = g; exists iff g is constant on each fiber of e
        and e is surjective enough to determine v."""
        values = [None] * e.target.size
        for x in range(e.source.size):
            y, z = e.table[x], g.table[x]
            if values[y] is None:
                values[y] = z
            elif values[y] != z:
                return None
        if any(v is None for v in values):
            return None
        v = PointedMap(e.target, g.target, tuple(values))
        if self.compose(v, e) != g:
            return None
        return v

    # --- optional capabilities ---------------------------------------------

    def admissible_factorization(self, f: PointedMap):
        """Deflation-then-inflation factorization, or None ("not
        admissible" is a value here, unlike the abelian case)."""
        from . import core

        off_kernel = [v for v in f.table if v != 0]
        if len(off_kernel) != len(set(off_kernel)):
            return None
        image = sorted(set(f.table) | {0})
        I = PointedSet(len(image))
        relabel = {y: idx for idx, y in enumerate(image)}
        defl = PointedMap(f.source, I, tuple(relabel[v] for v in f.table))
        infl = PointedMap(I, f.target, tuple(image))
        K, k = self.kernel(defl)
        C, c = self.cokernel(infl)
        return core.AdmissibleFactorization(
            f=f, deflation_part=defl, inflation_part=infl, image=I,
            kernel_object=K, kernel=k, cokernel_object=C, cokernel=c)

    def pullback_of_deflation(self, p: PointedMap, f: PointedMap):
        """Pullback of p: B -> C along f: X -> C; elements are the pairs
        (b, x) with p(b) = f(x), basepoint (0, 0) first, then lex order."""
        from . import core

        if p.target != f.target:
            raise ValueError("pullback legs must share a target")
        pairs = [(0, 0)] + [(b, x)
                            for b in range(p.source.size)
                            for x in range(f.source.size)
                            if p.table[b] == f.table[x] and (b, x) != (0, 0)]
        index = {bx: i for i, bx in enumerate(pairs)}
        P = PointedSet(len(pairs))
        pr_left = PointedMap(P, p.source, tuple(b for b, _ in pairs))
        pr_right = PointedMap(P, f.source, tuple(x for _, x in pairs))

        def mediate(u: PointedMap, v: PointedMap) -> PointedMap:
            if self.compose(p, u) != self.compose(f, v):
                raise ValueError("square does not commute")
            return PointedMap(u.source, P,
                              tuple(index[(u.table[w], v.table[w])]
                                    for w in range(u.source.size)))

        return core.Pullback(P, pr_left, pr_right, mediate)

    # --- enumeration --------------------------------------------------------

    def enumerate_objects(self, max_size: int):
        for n in range(1, max_size + 1):
            yield PointedSet(n)

    def enumerate_morphisms(self, A: PointedSet, B: PointedSet):
        for rest in itertools.product(range(B.size), repeat=A.size - 1):
            yield PointedMap(A, B, (0,) + rest)

    def enumerate_deflations(self, A: PointedSet, B: PointedSet):
        for f in self.enumerate_morphisms(A, B):
            if self.is_deflation(f):
                yield f


POINTED = PointedSetsInstance()
