"""Generic exactness algorithms over any CategoryInstance.

Everything here is element-free: the constructions only use composition,
kernels, cokernels and the two universal-property solvers, so they run
unchanged over abelian groups and over pointed sets.  Each construction
follows the constructive proof it implements step by step and re-verifies
its own conclusions; a failed conclusion on a hypothesis-satisfying input
is reported, never silently patched, since in a verified instance it is a
hard bug signal.

Failure taxonomy:
  * DiagramError   -- the input violates the stated hypotheses.
  * LiftError      -- a kernel/cokernel/lift the construction needs does
                      not exist (the instance is not weakly exact on this
                      data).
  * result.exact / report.ok = False -- hypotheses held but a conclusion
                      check failed.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Any, Callable

from .core import (CategoryInstance, AdmissibleFactorization, DiagramError,
                   LiftError, SESReport, check_short_exact, cokernel_colift,
                   is_inflation, iso_between_monos, kernel_lift)


# ---------------------------------------------------------------------------
# snake lemma
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SnakeDiagram:
    """Two short exact rows joined by three admissible verticals.

        A1 --phi1--> A2 --phi2--> A3
        |f1          |f2          |f3
        v            v            v
        B1 --phi1p-> B2 --phi2p-> B3
    """
    phi1: Any
    phi2: Any
    phi1p: Any
    phi2p: Any
    f1: AdmissibleFactorization
    f2: AdmissibleFactorization
    f3: AdmissibleFactorization


def validate_snake_diagram(cat: CategoryInstance, d: SnakeDiagram) -> None:
    """Raise DiagramError naming every violated hypothesis clause."""
    bad = []
    r = check_short_exact(cat, d.phi1, d.phi2)
    if not r:
        bad.append("top row not short exact: " + "; ".join(r.failures))
    r = check_short_exact(cat, d.phi1p, d.phi2p)
    if not r:
        bad.append("bottom row not short exact: " + "; ".join(r.failures))
    if not cat.equal(cat.compose(d.f2.f, d.phi1),
                     cat.compose(d.phi1p, d.f1.f)):
        bad.append("left square does not commute")
    if not cat.equal(cat.compose(d.f3.f, d.phi2),
                     cat.compose(d.phi2p, d.f2.f)):
        bad.append("right square does not commute")
    for name, fac in (("f1", d.f1), ("f2", d.f2), ("f3", d.f3)):
        from .core import validate_factorization
        r = validate_factorization(cat, fac)
        if not r:
            bad.append(f"{name} not admissible: " + "; ".join(r.failures))
    if bad:
        raise DiagramError("; ".join(bad))


@dataclass
class SnakeWitnesses:
    """Every internal object and morphism of the connecting-morphism
    construction, kept for post-hoc auditing and for the downstream
    long-exact-sequence gluing."""
    phi2pp: Any          # I2 -> I3
    J1: Any
    iota_J1: Any         # J1 -> I2, kernel of phi2pp
    epsilon: Any         # J1 -> B1
    c2p: Any             # B1 -> ker(psi2p)
    ker_psi2p: Any
    i2: Any              # ker(psi2p) -> C2
    alpha: Any           # C1 -> ker(psi2p), deflation
    ker_psi1p: Any
    i1: Any              # ker(psi1p) -> C1
    T: Any
    t: Any               # T -> B1
    eps_prime: Any       # I1 -> T
    j: Any               # T -> ker(psi1p)
    w: Any               # T -> J1 identifying the two kernels
    p_obj: Any           # P
    pi1: Any             # P -> A2
    theta1: Any          # A1 -> P
    theta2: Any          # P -> K3
    k2p: Any             # K2 -> P
    p: Any               # P -> J1
    delta_p: Any         # K3 -> ker(psi1p), deflation
    ker_delta_p: Any
    kd: Any              # ker(delta_p) -> K3
    e2: Any              # K2 -> ker(delta_p)


@dataclass
class SnakeResult:
    psi1: Any            # K1 -> K2, inflation
    psi2: Any            # K2 -> K3
    delta: Any           # K3 -> C1
    psi1p: Any           # C1 -> C2
    psi2p: Any           # C2 -> C3, deflation
    witnesses: SnakeWitnesses
    checks: dict[str, SESReport]
    identities: dict[str, bool]

    @property
    def exact(self) -> bool:
        return (all(self.checks.values())
                and all(self.identities.values()))

    def morphisms(self):
        return [self.psi1, self.psi2, self.delta, self.psi1p, self.psi2p]


def snake(cat: CategoryInstance, d: SnakeDiagram) -> SnakeResult:
    """The connecting morphism and the six-term sequence.

    delta is assembled as i1 @ delta_p where delta_p is the colift,
    through the deflation theta2: P -> K3, of the composite
    P -> J1 -> ker(psi1p); exactness of
    K1 -> K2 -> K3 -> C1 -> C2 -> C3 is then re-verified with the
    construction's own witness objects as the Z-objects.
    """
    validate_snake_diagram(cat, d)
    f1p, f1pp = d.f1.deflation_part, d.f1.inflation_part
    f2p, f2pp = d.f2.deflation_part, d.f2.inflation_part
    f3p, f3pp = d.f3.deflation_part, d.f3.inflation_part
    k1, k2, k3 = d.f1.kernel, d.f2.kernel, d.f3.kernel
    c1, c2, c3 = d.f1.cokernel, d.f2.cokernel, d.f3.cokernel

    # induced maps on kernels and cokernels
    psi1 = kernel_lift(cat, f2p, k2, cat.compose(d.phi1, k1))
    psi2 = kernel_lift(cat, f3p, k3, cat.compose(d.phi2, k2))
    psi1p = cokernel_colift(cat, f1pp, c1, cat.compose(c2, d.phi1p))
    psi2p = cokernel_colift(cat, f2pp, c2, cat.compose(c3, d.phi2p))

    identities: dict[str, bool] = {}
    checks: dict[str, SESReport] = {}

    # the middle interchange I2 -> I3
    phi2pp = cokernel_colift(cat, k2, f2p, cat.compose(f3p, d.phi2))
    identities["phi2pp lower square"] = cat.equal(
        cat.compose(f3pp, phi2pp), cat.compose(d.phi2p, f2pp))
    identities["phi2pp deflation"] = cat.is_deflation(phi2pp)
    J1, iota_J1 = cat.kernel(phi2pp)

    # exactness at C2: psi1p factors through ker(psi2p) by a deflation
    KP2, i2 = cat.kernel(psi2p)
    c2p = kernel_lift(cat, psi2p, i2, cat.compose(c2, d.phi1p))
    epsilon = kernel_lift(cat, d.phi2p, d.phi1p,
                          cat.compose(f2pp, iota_J1))
    checks["J1 -> B1 -> ker(psi2p)"] = check_short_exact(cat, epsilon, c2p)
    alpha = kernel_lift(cat, psi2p, i2, psi1p)
    identities["alpha deflation"] = cat.is_deflation(alpha)
    checks["exact at C2"] = check_short_exact(cat, i2, psi2p)

    # delta': the kernel of psi1p receives K3 by a deflation
    KP1, i1 = cat.kernel(psi1p)
    T, t = cat.kernel(cat.compose(psi1p, c1))
    eps_prime = kernel_lift(cat, cat.compose(psi1p, c1), t, f1pp)
    j = kernel_lift(cat, psi1p, i1, cat.compose(c1, t))
    checks["I1 -> T -> ker(psi1p)"] = check_short_exact(cat, eps_prime, j)
    # T and J1 are both kernels over B1; identify them explicitly
    w = iso_between_monos(cat, t, epsilon)          # T -> J1
    winv = iso_between_monos(cat, epsilon, t)       # J1 -> T
    j_J = cat.compose(j, winv)                      # J1 -> ker(psi1p)
    epsp_J = cat.compose(w, eps_prime)              # I1 -> J1

    P, pi1 = cat.kernel(cat.compose(f3p, d.phi2))
    identities["two descriptions of P's map"] = cat.equal(
        cat.compose(f3p, d.phi2), cat.compose(phi2pp, f2p))
    theta1 = kernel_lift(cat, cat.compose(f3p, d.phi2), pi1, d.phi1)
    theta2 = kernel_lift(cat, f3p, k3, cat.compose(d.phi2, pi1))
    checks["A1 -> P -> K3"] = check_short_exact(cat, theta1, theta2)
    k2p = kernel_lift(cat, cat.compose(f3p, d.phi2), pi1, k2)
    p = kernel_lift(cat, phi2pp, iota_J1, cat.compose(f2p, pi1))
    checks["K2 -> P -> J1"] = check_short_exact(cat, k2p, p)
    identities["p theta1 = eps' f1'"] = cat.equal(
        cat.compose(p, theta1), cat.compose(epsp_J, f1p))

    delta_p = cat.colift_through_epi(theta2, cat.compose(j_J, p))
    if delta_p is None or not cat.equal(cat.compose(delta_p, theta2),
                                        cat.compose(j_J, p)):
        raise LiftError("delta' does not colift through theta2")
    identities["delta' deflation"] = cat.is_deflation(delta_p)
    delta = cat.compose(i1, delta_p)

    # exactness at K2, K3, C1 with the construction's witnesses
    KD, kd = cat.kernel(delta_p)
    e2 = kernel_lift(cat, delta_p, kd, psi2)
    checks["exact at K2"] = check_short_exact(cat, psi1, e2)
    checks["exact at K3"] = check_short_exact(cat, kd, delta_p)
    checks["exact at C1"] = check_short_exact(cat, i1, alpha)
    identities["psi2 = theta2 k2'"] = cat.equal(
        psi2, cat.compose(theta2, k2p))

    wit = SnakeWitnesses(
        phi2pp=phi2pp, J1=J1, iota_J1=iota_J1, epsilon=epsilon, c2p=c2p,
        ker_psi2p=KP2, i2=i2, alpha=alpha, ker_psi1p=KP1, i1=i1,
        T=T, t=t, eps_prime=eps_prime, j=j, w=w,
        p_obj=P, pi1=pi1, theta1=theta1, theta2=theta2, k2p=k2p, p=p,
        delta_p=delta_p, ker_delta_p=KD, kd=kd, e2=e2)
    return SnakeResult(psi1=psi1, psi2=psi2, delta=delta,
                       psi1p=psi1p, psi2p=psi2p, witnesses=wit,
                       checks=checks, identities=identities)


@dataclass
class ExtendedSnakeResult:
    """Six-term sequence K1' -> K2 -> K3 -> C1 -> C2 -> C3' from a snake
    diagram whose first map was precomposed with a deflation and whose
    last map was postcomposed with an inflation."""
    base: SnakeResult
    K1p: Any
    k1p: Any             # K1' -> A1'
    u: Any               # K1' -> K1, deflation
    C3p: Any
    c3p: Any             # B3' -> C3'
    v: Any               # C3 -> C3', inflation
    checks: dict[str, SESReport]
    identities: dict[str, bool]

    def morphisms(self):
        cat = None  # composed at construction time; see first/last fields
        return [self.first, self.base.psi2, self.base.delta,
                self.base.psi1p, self.last]

    first: Any = None    # K1' -> K2
    last: Any = None     # C2 -> C3'

    @property
    def exact(self) -> bool:
        return (self.base.exact and all(self.checks.values())
                and all(self.identities.values()))


def snake_extended(cat: CategoryInstance, d: SnakeDiagram,
                   a, b) -> ExtendedSnakeResult:
    """Snake with a deflation a: A1' -> A1 glued on the left and an
    inflation b: B3 -> B3' glued on the right.

    K1' is the kernel of the composite A1' -> A1 -> B1 and C3' the
    cokernel of A3 -> B3 -> B3'; the connecting data of the plain snake
    is reused unchanged.
    """
    if not cat.is_deflation(a):
        raise DiagramError("a is not a deflation")
    r = is_inflation(cat, b)
    if not r:
        raise DiagramError("b is not an inflation: " + "; ".join(r.failures))
    base = snake(cat, d)
    identities: dict[str, bool] = {}
    checks: dict[str, SESReport] = {}

    f1p = d.f1.deflation_part
    K1p, k1p = cat.kernel(cat.compose(f1p, a))
    u = kernel_lift(cat, f1p, d.f1.kernel, cat.compose(a, k1p))
    identities["K1' -> K1 deflation"] = cat.is_deflation(u)

    C3p, c3p = cat.cokernel(cat.compose(b, d.f3.f))
    v = cokernel_colift(cat, d.f3.inflation_part, d.f3.cokernel,
                        cat.compose(c3p, b))
    checks["C3 -> C3' inflation"] = is_inflation(cat, v)

    first = cat.compose(base.psi1, u)
    last = cat.compose(v, base.psi2p)
    # finite-end convention: the outermost factorization pieces must
    # themselves sit in short exact sequences
    KU, ku = cat.kernel(u)
    checks["left end"] = check_short_exact(cat, ku, u)
    return ExtendedSnakeResult(base=base, K1p=K1p, k1p=k1p, u=u,
                               C3p=C3p, c3p=c3p, v=v, checks=checks,
                               identities=identities, first=first, last=last)


def inflation_cancellation(cat: CategoryInstance, f, g):
    """If g and g @ f are inflations then so is f; returns the witness.

    Construction: with (g, p: C -> D) and (gf, q: C -> D') short exact,
    the colift p' : D' -> D of p through q is a deflation, and f is the
    kernel of the composite B -> C -> D', exhibited by the short exact
    sequence (f, ker-composite).  Returns (p', ses_report_for_f).
    """
    r = is_inflation(cat, g)
    if not r:
        raise DiagramError("g not an inflation: " + "; ".join(r.failures))
    gf = cat.compose(g, f)
    r = is_inflation(cat, gf)
    if not r:
        raise DiagramError("gf not an inflation: " + "; ".join(r.failures))
    D, p = cat.cokernel(g)
    Dp, q = cat.cokernel(gf)
    pp = cokernel_colift(cat, gf, q, p)     # D' -> D
    if not cat.is_deflation(pp):
        raise LiftError("p' is not a deflation")
    # q @ g: B -> D' lands in ker(p') since p' q g = p g = 0; the
    # corestriction is the deflation that exhibits f as its kernel
    Kp, kp = cat.kernel(pp)
    cof = kernel_lift(cat, pp, kp, cat.compose(q, g))
    report = check_short_exact(cat, f, cof)
    return pp, report


# ---------------------------------------------------------------------------
# 3x3 family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridDiagram3x3:
    """Nine objects and twelve morphisms:

        A1 --phi1---> A2 --phi2---> A3
        |f1           |f2           |f3
        B1 --phi1p--> B2 --phi2p--> B3
        |g1           |g2           |g3
        C1 --phi1pp-> C2 --phi2pp-> C3
    """
    phi1: Any
    phi2: Any
    phi1p: Any
    phi2p: Any
    phi1pp: Any
    phi2pp: Any
    f1: Any
    f2: Any
    f3: Any
    g1: Any
    g2: Any
    g3: Any


def validate_grid_squares(cat: CategoryInstance, g: GridDiagram3x3) -> None:
    squares = [
        ("top left", cat.compose(g.f2, g.phi1), cat.compose(g.phi1p, g.f1)),
        ("top right", cat.compose(g.f3, g.phi2), cat.compose(g.phi2p, g.f2)),
        ("bottom left", cat.compose(g.g2, g.phi1p),
         cat.compose(g.phi1pp, g.g1)),
        ("bottom right", cat.compose(g.g3, g.phi2p),
         cat.compose(g.phi2pp, g.g2)),
    ]
    bad = [name for name, lhs, rhs in squares if not cat.equal(lhs, rhs)]
    if bad:
        raise DiagramError("non-commuting squares: " + ", ".join(bad))


@dataclass
class KernelSequenceResult:
    K1: Any
    K2: Any
    K3: Any
    k1: Any
    k2: Any
    k3: Any
    psi1: Any
    psi2: Any
    report: SESReport
    paths_agree: bool | None     # None when the pullback path is unavailable


def induced_kernel_sequence(cat: CategoryInstance, phi1, phi2, phi1p, phi2p,
                            f1, f2, f3) -> KernelSequenceResult:
    """Short exactness of the kernel row over two short exact rows with
    deflation verticals; computed directly and, when the instance has
    pullbacks, re-derived through the pullback construction.  Both paths
    must return equal morphisms, not merely isomorphic ones.
    """
    for name, r in (("top", check_short_exact(cat, phi1, phi2)),
                    ("bottom", check_short_exact(cat, phi1p, phi2p))):
        if not r:
            raise DiagramError(f"{name} row not short exact: "
                               + "; ".join(r.failures))
    for name, f in (("f1", f1), ("f2", f2), ("f3", f3)):
        if not cat.is_deflation(f):
            raise DiagramError(f"{name} is not a deflation")
    if not cat.equal(cat.compose(f2, phi1), cat.compose(phi1p, f1)):
        raise DiagramError("left square does not commute")
    if not cat.equal(cat.compose(f3, phi2), cat.compose(phi2p, f2)):
        raise DiagramError("right square does not commute")

    K1, k1 = cat.kernel(f1)
    K2, k2 = cat.kernel(f2)
    K3, k3 = cat.kernel(f3)
    psi1 = kernel_lift(cat, f2, k2, cat.compose(phi1, k1))
    psi2 = kernel_lift(cat, f3, k3, cat.compose(phi2, k2))
    report = check_short_exact(cat, psi1, psi2)

    paths_agree = None
    if cat.supports("pullback_of_deflation"):
        pb = cat.pullback_of_deflation(phi2p, f3)
        pi1 = pb.mediate(f2, phi2)                     # A2 -> P
        k3p = pb.mediate(cat.zero_morphism(K3, phi2p.source), k3)
        psi2_b = kernel_lift(cat, pb.pr_left, k3p, cat.compose(pi1, k2))
        paths_agree = cat.equal(psi2, psi2_b)
    return KernelSequenceResult(K1, K2, K3, k1, k2, k3, psi1, psi2,
                                report, paths_agree)


@dataclass
class ThreeByThreeDualResult:
    A3p: Any
    m: Any               # A3' -> B3, kernel of g3
    iso: Any             # A3 -> A3'
    report: SESReport    # third column short exact
    identities: dict[str, bool]


def three_by_three_dual(cat: CategoryInstance,
                        g: GridDiagram3x3) -> ThreeByThreeDualResult:
    """Self-duality of the kernel-rows axiom: with all three rows short
    exact and the first two columns short exact, the third column is
    short exact, witnessed by the canonical isomorphism A3 -> A3'."""
    validate_grid_squares(cat, g)
    for name, r in (("first row", check_short_exact(cat, g.phi1, g.phi2)),
                    ("second row", check_short_exact(cat, g.phi1p, g.phi2p)),
                    ("third row", check_short_exact(cat, g.phi1pp, g.phi2pp)),
                    ("first column", check_short_exact(cat, g.f1, g.g1)),
                    ("second column", check_short_exact(cat, g.f2, g.g2))):
        if not r:
            raise DiagramError(f"{name} not short exact: "
                               + "; ".join(r.failures))
    identities = {"g3 deflation": cat.is_deflation(g.g3)}
    A3p, m = cat.kernel(g.g3)
    u = kernel_lift(cat, g.g3, m, cat.compose(g.f3, g.phi2))   # A2 -> A3'
    # A1 -> A2 -> A3' is short exact; both phi2 and u are cokernels of
    # phi1, giving the unique comparison isomorphism
    identities["replacement row"] = bool(check_short_exact(cat, g.phi1, u))
    iso = cokernel_colift(cat, g.phi1, g.phi2, u)              # A3 -> A3'
    identities["iso"] = cat.is_isomorphism(iso)
    identities["f3 = m iso"] = cat.equal(g.f3, cat.compose(m, iso))
    report = check_short_exact(cat, g.f3, g.g3)
    return ThreeByThreeDualResult(A3p=A3p, m=m, iso=iso, report=report,
                                  identities=identities)


@dataclass
class FullThreeByThreeResult:
    P: Any
    theta1: Any          # A3 -> P
    theta2: Any          # P -> C2
    psi1: Any            # B2 -> P
    psi2: Any            # P -> B3
    B1p: Any
    phi1p_tilde: Any     # B1' -> B2
    psi: Any             # B1 -> B1', an isomorphism
    report: SESReport    # middle row short exact
    identities: dict[str, bool]


def full_three_by_three(cat: CategoryInstance,
                        g: GridDiagram3x3) -> FullThreeByThreeResult:
    """Columns and outer rows short exact, middle row a complex =>
    middle row short exact.  Needs the pullback capability."""
    validate_grid_squares(cat, g)
    for name, r in (("first column", check_short_exact(cat, g.f1, g.g1)),
                    ("second column", check_short_exact(cat, g.f2, g.g2)),
                    ("third column", check_short_exact(cat, g.f3, g.g3)),
                    ("first row", check_short_exact(cat, g.phi1, g.phi2)),
                    ("third row", check_short_exact(cat, g.phi1pp,
                                                    g.phi2pp))):
        if not r:
            raise DiagramError(f"{name} not short exact: "
                               + "; ".join(r.failures))
    if not cat.is_zero(cat.compose(g.phi2p, g.phi1p)):
        raise DiagramError("middle row is not a complex")
    if not cat.supports("pullback_of_deflation"):
        raise DiagramError("instance lacks pullback_of_deflation")

    pb = cat.pullback_of_deflation(g.phi2pp, g.g3)   # over C3
    theta2, psi2 = pb.pr_left, pb.pr_right           # P -> C2, P -> B3
    A3 = g.f3.source
    theta1 = pb.mediate(cat.zero_morphism(A3, g.phi2pp.source), g.f3)
    psi1 = pb.mediate(g.g2, g.phi2p)
    identities = {
        "psi2 psi1 = phi2p": cat.equal(cat.compose(psi2, psi1), g.phi2p),
        "theta2 psi1 = g2": cat.equal(cat.compose(theta2, psi1), g.g2),
        "psi1 deflation": cat.is_deflation(psi1),
        "psi2 deflation": cat.is_deflation(psi2),
        "phi2p deflation": cat.is_deflation(g.phi2p),
    }
    B1p, phi1p_tilde = cat.kernel(g.phi2p)
    f1t = kernel_lift(cat, g.phi2p, phi1p_tilde,
                      cat.compose(g.f2, g.phi1))     # A1 -> B1'
    g1t = kernel_lift(cat, g.phi2pp, g.phi1pp,
                      cat.compose(g.g2, phi1p_tilde))   # B1' -> C1
    identities["induced A1 -> B1' -> C1"] = bool(
        check_short_exact(cat, f1t, g1t))
    psi = kernel_lift(cat, g.phi2p, phi1p_tilde, g.phi1p)   # B1 -> B1'
    identities["psi f1 = f1t"] = cat.equal(cat.compose(psi, g.f1), f1t)
    identities["g1t psi = g1"] = cat.equal(cat.compose(g1t, psi), g.g1)
    identities["psi iso"] = cat.is_isomorphism(psi)
    report = check_short_exact(cat, g.phi1p, g.phi2p)
    return FullThreeByThreeResult(P=pb.obj, theta1=theta1, theta2=theta2,
                                  psi1=psi1, psi2=psi2, B1p=B1p,
                                  phi1p_tilde=phi1p_tilde, psi=psi,
                                  report=report, identities=identities)


# ---------------------------------------------------------------------------
# long exactness
# ---------------------------------------------------------------------------

@dataclass
class LongExactReport:
    ok: bool
    joints: list[tuple[str, SESReport]] = field(default_factory=list)

    def __bool__(self):
        return self.ok


def check_long_exact(cat: CategoryInstance, morphisms: list,
                     factorizations: list[AdmissibleFactorization]
                     ) -> LongExactReport:
    """Exactness of a finite sequence, one factorization per morphism.

    Each morphism must factor through its Z-object; exactness at the
    i-th interior object is the short exactness of (inflation into it,
    deflation out of it).  At a finite end the outermost piece must sit
    in a short exact sequence of its own: the first deflation part with
    its kernel, the last inflation part with its cokernel.
    """
    if len(morphisms) != len(factorizations):
        raise DiagramError("sequence/factorization length mismatch")
    if not morphisms:
        raise DiagramError("empty sequence")
    joints: list[tuple[str, SESReport]] = []
    for n, (m, fac) in enumerate(zip(morphisms, factorizations)):
        if not cat.equal(m, fac.f):
            raise DiagramError(f"factorization {n} is not of morphism {n}")
        if not cat.equal(cat.compose(fac.inflation_part, fac.deflation_part),
                         fac.f):
            raise DiagramError(f"factorization {n} does not compose")
    for n in range(len(morphisms) - 1):
        if morphisms[n].target != morphisms[n + 1].source:
            raise DiagramError(f"morphisms {n}, {n + 1} not composable")
        r = check_short_exact(cat, factorizations[n].inflation_part,
                              factorizations[n + 1].deflation_part)
        joints.append((f"exact at position {n + 1}", r))
    joints.append(("left end",
                   check_short_exact(cat, factorizations[0].kernel,
                                     factorizations[0].deflation_part)))
    joints.append(("right end",
                   check_short_exact(cat, factorizations[-1].inflation_part,
                                     factorizations[-1].cokernel)))
    return LongExactReport(all(r for _, r in joints), joints)


# ---------------------------------------------------------------------------
# axiom verification
# ---------------------------------------------------------------------------

PASS, FAIL, INCONCLUSIVE = "PASS", "FAIL", "INCONCLUSIVE"


@dataclass
class AxiomReport:
    axiom: str
    status: str
    checked: int
    counterexample: str | None = None

    def __str__(self):
        tail = f"  [{self.counterexample}]" if self.counterexample else ""
        return f"{self.axiom}: {self.status} ({self.checked} checks){tail}"


class _Budget:
    def __init__(self, seconds: float | None):
        self.deadline = None if seconds is None else time.monotonic() + seconds

    def exhausted(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline


def _axiom_result(name, checked, counterexample, budget) -> AxiomReport:
    if counterexample is not None:
        return AxiomReport(name, FAIL, checked, counterexample)
    if budget.exhausted():
        return AxiomReport(name, INCONCLUSIVE, checked, "budget exhausted")
    return AxiomReport(name, PASS, checked)


def verify_axioms_exhaustive(cat: CategoryInstance, max_size: int,
                             time_budget_s: float | None = None
                             ) -> list[AxiomReport]:
    """Check axioms 0-4 and the pullback axioms (4a)/(4b) by enumerating
    every qualifying diagram over objects up to max_size, one canonical
    representative per isomorphism class of objects.

    Requires the enumeration capabilities.  A FAIL carries a minimal
    counterexample (enumeration is ordered by size).
    """
    if not cat.supports("enumerate_objects"):
        raise DiagramError("instance does not support enumeration")
    budget = _Budget(time_budget_s)
    objs = list(cat.enumerate_objects(max_size))
    reports = []

    def all_maps(A, B):
        return cat.enumerate_morphisms(A, B)

    # axiom 0: isomorphisms and maps to zero are deflations
    checked, ce = 0, None
    for A, B in itertools.product(objs, objs):
        if budget.exhausted() or ce:
            break
        for f in all_maps(A, B):
            if cat.is_isomorphism(f) and not cat.is_deflation(f):
                ce = f"isomorphism not a deflation: {f}"
                break
            checked += 1
    for A in objs:
        if not cat.is_deflation(cat.to_zero(A)):
            ce = ce or f"{A} -> 0 not a deflation"
        checked += 1
    reports.append(_axiom_result("axiom 0", checked, ce, budget))

    # axiom 1: deflations have kernels and are cokernels of them
    checked, ce = 0, None
    for A, B in itertools.product(objs, objs):
        if budget.exhausted() or ce:
            break
        for f in all_maps(A, B):
            if not cat.is_deflation(f):
                continue
            K, k = cat.kernel(f)
            r = check_short_exact(cat, k, f)
            checked += 1
            if not r:
                ce = f"deflation {f}: " + "; ".join(r.failures)
                break
    reports.append(_axiom_result("axiom 1", checked, ce, budget))

    # axiom 2: deflations compose
    checked, ce = 0, None
    for A, B, C in itertools.product(objs, objs, objs):
        if budget.exhausted() or ce:
            break
        for f in cat.enumerate_deflations(A, B):
            if ce:
                break
            for g in cat.enumerate_deflations(B, C):
                checked += 1
                if not cat.is_deflation(cat.compose(g, f)):
                    ce = f"composite of {g} and {f} not a deflation"
                    break
    reports.append(_axiom_result("axiom 2", checked, ce, budget))

    # axiom 3: gf, f deflations => g deflation
    checked, ce = 0, None
    for A, B, C in itertools.product(objs, objs, objs):
        if budget.exhausted() or ce:
            break
        for f in cat.enumerate_deflations(A, B):
            if ce:
                break
            for g in all_maps(B, C):
                if not cat.is_deflation(cat.compose(g, f)):
                    continue
                checked += 1
                if not cat.is_deflation(g):
                    ce = f"gf, f deflations but g = {g} is not"
                    break
    reports.append(_axiom_result("axiom 3", checked, ce, budget))

    # precompute all short exact pairs, keyed by nothing (small world)
    def enumerate_ses():
        for X, Y, Z in itertools.product(objs, objs, objs):
            for p in cat.enumerate_deflations(Y, Z):
                for i in all_maps(X, Y):
                    if check_short_exact(cat, i, p):
                        yield i, p

    # axiom 4: kernel rows over short exact rows with deflation verticals
    checked, ce = 0, None
    all_ses = list(enumerate_ses())
    for phi1p, phi2p in all_ses:
        if budget.exhausted() or ce:
            break
        B1, B2, B3 = phi1p.source, phi1p.target, phi2p.target
        for C1, C2 in itertools.product(objs, objs):
            if ce:
                break
            for g1 in cat.enumerate_deflations(B1, C1):
                if ce:
                    break
                for g2 in cat.enumerate_deflations(B2, C2):
                    # the bottom row maps are forced by the epi verticals
                    phi1pp = cat.colift_through_epi(
                        g1, cat.compose(g2, phi1p))
                    if phi1pp is None:
                        continue
                    for C3 in objs:
                        for g3 in cat.enumerate_deflations(B3, C3):
                            phi2pp = cat.colift_through_epi(
                                g2, cat.compose(g3, phi2p))
                            if phi2pp is None:
                                continue
                            if not check_short_exact(cat, phi1pp, phi2pp):
                                continue
                            checked += 1
                            res = induced_kernel_sequence(
                                cat, phi1p, phi2p, phi1pp, phi2pp,
                                g1, g2, g3)
                            if not res.report or res.paths_agree is False:
                                ce = (f"grid over rows ({phi1p},{phi2p}) / "
                                      f"({phi1pp},{phi2pp}), verticals "
                                      f"({g1},{g2},{g3}): "
                                      + "; ".join(res.report.failures))
                                break
                        if ce:
                            break
    reports.append(_axiom_result("axiom 4", checked, ce, budget))

    # axiom 4a: pullbacks of deflations along deflations are deflations
    checked, ce = 0, None
    if cat.supports("pullback_of_deflation"):
        for B, C, D in itertools.product(objs, objs, objs):
            if budget.exhausted() or ce:
                break
            for p in cat.enumerate_deflations(B, C):
                if ce:
                    break
                for f in cat.enumerate_deflations(D, C):
                    pb = cat.pullback_of_deflation(p, f)
                    checked += 1
                    if not (cat.is_deflation(pb.pr_right)
                            and cat.is_deflation(pb.pr_left)):
                        ce = f"pullback of {p} along {f} not a deflation"
                        break
        reports.append(_axiom_result("axiom 4a", checked, ce, budget))
    else:
        reports.append(AxiomReport("axiom 4a", INCONCLUSIVE, 0,
                                   "no pullback capability"))

    # axiom 4b: over two kernel presentations of the same deflation target,
    # the induced kernel map is a deflation iff the middle map is
    checked, ce = 0, None
    for A2, A3, B2 in itertools.product(objs, objs, objs):
        if budget.exhausted() or ce:
            break
        for phi2 in cat.enumerate_deflations(A2, A3):
            if ce:
                break
            A1, phi1 = cat.kernel(phi2)
            for phi2p in cat.enumerate_deflations(B2, A3):
                if ce:
                    break
                B1, phi1p = cat.kernel(phi2p)
                for f2 in all_maps(A2, B2):
                    if not cat.equal(cat.compose(phi2p, f2), phi2):
                        continue
                    f1 = cat.lift_through_mono(phi1p,
                                               cat.compose(f2, phi1))
                    if f1 is None:
                        ce = f"no induced kernel map under f2 = {f2}"
                        break
                    checked += 1
                    if cat.is_deflation(f1) != cat.is_deflation(f2):
                        ce = (f"f1 = {f1} deflation is "
                              f"{cat.is_deflation(f1)} but f2 = {f2} "
                              f"deflation is {cat.is_deflation(f2)}")
                        break
    reports.append(_axiom_result("axiom 4b", checked, ce, budget))
    return reports


def verify_axioms_randomized(cat: CategoryInstance, sampler,
                             samples: int = 200,
                             time_budget_s: float | None = None
                             ) -> list[AxiomReport]:
    """Randomized axiom evidence for instances too big to enumerate.

    ``sampler`` supplies precondition-satisfying random data: it must
    provide random_deflation(), random_deflation_pair() (composable),
    random_post_map(deflation), random_axiom4_grid(), and when the
    instance has pullbacks random_cotarget_deflations() and
    random_axiom4b_data().  PASS here means "no counterexample in the
    sample", never a proof.
    """
    budget = _Budget(time_budget_s)
    reports = []

    def run(name, gen, check):
        checked, ce = 0, None
        for _ in range(samples):
            if budget.exhausted():
                break
            data = gen()
            checked += 1
            msg = check(data)
            if msg:
                ce = msg
                break
        reports.append(_axiom_result(name, checked, ce, budget))

    run("axiom 0",
        sampler.random_isomorphism,
        lambda f: None if cat.is_deflation(f)
        else f"isomorphism not a deflation: {f}")

    def check1(f):
        K, k = cat.kernel(f)
        r = check_short_exact(cat, k, f)
        return None if r else "deflation not cokernel of kernel: " + \
            "; ".join(r.failures)
    run("axiom 1", sampler.random_deflation, check1)

    run("axiom 2",
        sampler.random_deflation_pair,
        lambda fg: None if cat.is_deflation(cat.compose(fg[1], fg[0]))
        else "deflations do not compose to a deflation")

    def check3(data):
        f, g = data
        if not cat.is_deflation(cat.compose(g, f)):
            return None     # hypothesis not met; still counts as sampled
        return None if cat.is_deflation(g) else "axiom 3 failed"
    run("axiom 3", sampler.random_axiom3_candidate, check3)

    def check4(grid):
        phi1p, phi2p, phi1pp, phi2pp, g1, g2, g3 = grid
        res = induced_kernel_sequence(cat, phi1p, phi2p, phi1pp, phi2pp,
                                      g1, g2, g3)
        if not res.report:
            return "kernel row not short exact: " + \
                "; ".join(res.report.failures)
        if res.paths_agree is False:
            return "pullback path disagrees with the direct path"
        return None
    run("axiom 4", sampler.random_axiom4_grid, check4)

    if cat.supports("pullback_of_deflation"):
        def check4a(pair):
            p, f = pair
            pb = cat.pullback_of_deflation(p, f)
            ok = cat.is_deflation(pb.pr_right) and cat.is_deflation(
                pb.pr_left)
            return None if ok else "pullback projection not a deflation"
        run("axiom 4a", sampler.random_cotarget_deflations, check4a)

        def check4b(data):
            phi2, phi2p, f2 = data
            A1, phi1 = cat.kernel(phi2)
            B1, phi1p = cat.kernel(phi2p)
            f1 = cat.lift_through_mono(phi1p, cat.compose(f2, phi1))
            if f1 is None:
                return "no induced kernel map"
            if cat.is_deflation(f1) != cat.is_deflation(f2):
                return "deflation status of f1 and f2 differ"
            return None
        run("axiom 4b", sampler.random_axiom4b_data, check4b)
    else:
        reports.append(AxiomReport("axiom 4a", INCONCLUSIVE, 0,
                                   "no pullback capability"))
        reports.append(AxiomReport("axiom 4b", INCONCLUSIVE, 0,
                                   "no pullback capability"))
    return reports
