"""Abstract interface for a category with zero object and a deflation class,
plus the generic constructions every instance shares.

An *instance* bundles the callable capabilities the generic algorithms need:
composition, equality, the deflation test, kernels, cokernels and the two
universal-property solvers (lifting through a mono, colifting through an
epi).  Objects and morphisms are opaque instance values; the engine only
touches them through the instance.

A deflation is a distinguished morphism that has a kernel and is the
cokernel of that kernel; a kernel of a deflation is an inflation.  A short
exact sequence is a pair (i, p) with p a deflation, i a kernel of p and p a
cokernel of i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


class ContractError(Exception):
    """An operation was called outside its stated preconditions."""


class LiftError(ContractError):
    """A universal-property lift/colift does not exist for the given data."""


class DiagramError(ContractError):
    """Input diagram violates its hypotheses; the message names the clause."""


class CategoryInstance:
    """Capability record.  Subclasses fill in the abstract methods; optional
    capabilities (pullbacks, factorizations, enumeration) may be absent and
    generic code must probe with ``hasattr`` / ``supports``."""

    zero_object: Any

    # --- required capabilities -------------------------------------------
    def identity(self, A):
        raise NotImplementedError

    def compose(self, g, f):
        raise NotImplementedError

    def equal(self, f, g) -> bool:
        raise NotImplementedError

    def is_deflation(self, f) -> bool:
        raise NotImplementedError

    def is_isomorphism(self, f) -> bool:
        raise NotImplementedError

    def kernel(self, f):
        """(K, k: K -> source(f)) with f @ k = 0 and k universal."""
        raise NotImplementedError

    def cokernel(self, f):
        """(C, c: target(f) -> C) with c @ f = 0 and c couniversal."""
        raise NotImplementedError

    def lift_through_mono(self, m, g):
        """u with m @ u = g, or None.  m is expected monic so u is unique."""
        raise NotImplementedError

    def colift_through_epi(self, e, g):
        """v with v @ e = g, or None.  e is expected epic so v is unique."""
        raise NotImplementedError

    def to_zero(self, A):
        """The unique morphism A -> 0."""
        raise NotImplementedError

    def from_zero(self, B):
        """The unique morphism 0 -> B."""
        raise NotImplementedError

    # --- optional capabilities -------------------------------------------
    def supports(self, name: str) -> bool:
        return getattr(type(self), name, None) is not getattr(
            CategoryInstance, name, None) and hasattr(self, name)

    def zero_morphism(self, A, B):
        return self.compose(self.from_zero(B), self.to_zero(A))

    def is_zero(self, f) -> bool:
        return self.equal(f, self.zero_morphism(f.source, f.target))


def kernel_lift(cat: CategoryInstance, p, k, g):
    """The unique u with k @ u = g, given k = ker(p) and p @ g = 0.

    Raises LiftError (not a crash) when p @ g != 0 or no lift exists.
    """
    if g.target != p.source:
        raise LiftError("kernel_lift: g does not land in source(p)")
    if not cat.is_zero(cat.compose(p, g)):
        raise LiftError("kernel_lift: p @ g is not the zero morphism")
    u = cat.lift_through_mono(k, g)
    if u is None or not cat.equal(cat.compose(k, u), g):
        raise LiftError("kernel_lift: no factorization through the kernel")
    return u


def cokernel_colift(cat: CategoryInstance, i, c, g):
    """The unique v with v @ c = g, given c = coker(i) and g @ i = 0."""
    if g.source != c.source:
        raise LiftError("cokernel_colift: g does not start at source(c)")
    if not cat.is_zero(cat.compose(g, i)):
        raise LiftError("cokernel_colift: g @ i is not the zero morphism")
    v = cat.colift_through_epi(c, g)
    if v is None or not cat.equal(cat.compose(v, c), g):
        raise LiftError("cokernel_colift: no factorization through cokernel")
    return v


@dataclass(frozen=True)
class AdmissibleFactorization:
    """f = inflation_part @ deflation_part with its four SES witnesses:
    kernel of the deflation part and cokernel of the inflation part."""
    f: Any
    deflation_part: Any   # source(f) -> image
    inflation_part: Any   # image -> target(f)
    image: Any
    kernel_object: Any
    kernel: Any           # kernel_object -> source(f)
    cokernel_object: Any
    cokernel: Any         # target(f) -> cokernel_object


def identity_factorization(cat: "CategoryInstance", A) -> AdmissibleFactorization:
    ida = cat.identity(A)
    K, k = cat.kernel(ida)
    C, c = cat.cokernel(ida)
    return AdmissibleFactorization(f=ida, deflation_part=ida,
                                   inflation_part=ida, image=A,
                                   kernel_object=K, kernel=k,
                                   cokernel_object=C, cokernel=c)


def validate_factorization(cat: "CategoryInstance",
                           fac: AdmissibleFactorization) -> SESReport:
    """Machine-check the AdmissibleFactorization invariants."""
    failures = []
    if not cat.equal(cat.compose(fac.inflation_part, fac.deflation_part),
                     fac.f):
        failures.append("factorization does not compose to f")
    r = check_short_exact(cat, fac.kernel, fac.deflation_part)
    if not r:
        failures.append("(kernel, deflation_part) not SES: "
                        + "; ".join(r.failures))
    r = check_short_exact(cat, fac.inflation_part, fac.cokernel)
    if not r:
        failures.append("(inflation_part, cokernel) not SES: "
                        + "; ".join(r.failures))
    return SESReport(not failures, failures)


@dataclass
class Pullback:
    obj: Any
    pr_left: Any    # P -> source(p)
    pr_right: Any   # P -> source(f)
    mediate: Any    # (u: X -> source(p), v: X -> source(f)) -> X -> P


@dataclass
class SESReport:
    ok: bool
    failures: list[str] = field(default_factory=list)

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class ShortExactSequence:
    i: Any  # A -> B
    p: Any  # B -> C


def check_short_exact(cat: CategoryInstance, i, p) -> SESReport:
    """Decide whether (i, p) is a short exact sequence and say why not.

    Checks, in order: composability, p a deflation, p @ i = 0, i a kernel
    of p (two lifts composing to identities), p a cokernel of i (dual).
    """
    failures = []
    if i.target != p.source:
        return SESReport(False, ["not composable"])
    if not cat.is_deflation(p):
        failures.append("p not a deflation")
    if not cat.is_zero(cat.compose(p, i)):
        failures.append("p @ i nonzero")
        return SESReport(False, failures)
    K, k = cat.kernel(p)
    u = cat.lift_through_mono(k, i)
    v = cat.lift_through_mono(i, k)
    if (u is None or v is None
            or not cat.equal(cat.compose(k, u), i)
            or not cat.equal(cat.compose(i, v), k)
            or not cat.equal(cat.compose(u, v), cat.identity(K))
            or not cat.equal(cat.compose(v, u), cat.identity(i.source))):
        failures.append("i not a kernel of p")
    C, c = cat.cokernel(i)
    w = cat.colift_through_epi(c, p)
    x = cat.colift_through_epi(p, c)
    if (w is None or x is None
            or not cat.equal(cat.compose(w, c), p)
            or not cat.equal(cat.compose(x, p), c)
            or not cat.equal(cat.compose(w, x), cat.identity(p.target))
            or not cat.equal(cat.compose(x, w), cat.identity(c.target))):
        failures.append("p not a cokernel of i")
    return SESReport(not failures, failures)


def is_inflation(cat: CategoryInstance, f) -> SESReport:
    """f is an inflation iff (f, coker f) is short exact."""
    C, c = cat.cokernel(f)
    return check_short_exact(cat, f, c)


def iso_between_monos(cat: CategoryInstance, m1, m2):
    """Given monos m1: X1 -> A, m2: X2 -> A with the same image, the unique
    iso t: X1 -> X2 with m2 @ t = m1.  Raises LiftError otherwise."""
    t = cat.lift_through_mono(m2, m1)
    s = cat.lift_through_mono(m1, m2)
    if (t is None or s is None
            or not cat.equal(cat.compose(m2, t), m1)
            or not cat.equal(cat.compose(t, s), cat.identity(m2.source))
            or not cat.equal(cat.compose(s, t), cat.identity(m1.source))):
        raise LiftError("monos are not images of each other")
    return t


def iso_between_epis(cat: CategoryInstance, e1, e2):
    """Given epis e1: A -> Y1, e2: A -> Y2 with the same kernel behaviour,
    the unique iso t: Y1 -> Y2 with t @ e1 = e2."""
    t = cat.colift_through_epi(e1, e2)
    s = cat.colift_through_epi(e2, e1)
    if (t is None or s is None
            or not cat.equal(cat.compose(t, e1), e2)
            or not cat.equal(cat.compose(t, s), cat.identity(e2.target))
            or not cat.equal(cat.compose(s, t), cat.identity(e1.target))):
        raise LiftError("epis do not present the same quotient")
    return t
