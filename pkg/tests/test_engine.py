"""Snake lemma, extended snake, kernel rows and 3x3 lemmas over fgab."""

import pytest

from wexact.core import check_short_exact, is_inflation
from wexact.engine import (PASS, GridDiagram3x3, SnakeDiagram, check_long_exact,
                           full_three_by_three, induced_kernel_sequence,
                           inflation_cancellation, snake, snake_extended,
                           three_by_three_dual, verify_axioms_randomized)
from wexact.fgab import FGAB, cyclic_group, free_group, morphism
from wexact.randgen import FgAbSampler

cat = FGAB
Z = free_group(1)


def _diagram(phi1, phi2, phi1p, phi2p, f1, f2, f3):
    return SnakeDiagram(phi1, phi2, phi1p, phi2p,
                        cat.admissible_factorization(f1),
                        cat.admissible_factorization(f2),
                        cat.admissible_factorization(f3))


def mult_by_m_diagram(m):
    """0 -> Z -> Z^2 -> Z -> 0 over itself with multiplication-by-m
    verticals.  delta must be zero (the rows are split and the verticals
    scalar), K-row = ker(m)-row, C-row = coker(m)-row."""
    Z2 = free_group(2)
    i = morphism(Z, Z2, [[1], [0]])
    p = morphism(Z2, Z, [[0, 1]])
    f = morphism(Z, Z, [[m]])
    f2 = morphism(Z2, Z2, [[m, 0], [0, m]])
    return _diagram(i, p, i, p, f, f2, f)


def test_snake_on_scalar_diagram_is_exact_with_zero_delta():
    d = mult_by_m_diagram(2)
    res = snake(cat, d)
    assert res.exact
    assert cat.is_zero(res.delta)
    report = check_long_exact(
        cat, res.morphisms(),
        [cat.admissible_factorization(f) for f in res.morphisms()])
    assert report.ok, report.joints


def test_snake_bockstein_has_nonzero_delta():
    # rows Z >--2--> Z --> Z/2 over itself, verticals x2 on the free
    # parts and 0 on Z/2: delta: Z/2 -> Z/2 is the Bockstein, an iso
    Z2tor = cyclic_group(2)
    i = morphism(Z, Z, [[2]])
    p = morphism(Z, Z2tor, [[1]])
    two = morphism(Z, Z, [[2]])
    zero = morphism(Z2tor, Z2tor, [[0]])
    d = _diagram(i, p, i, p, two, two, zero)
    res = snake(cat, d)
    assert res.exact
    assert not cat.is_zero(res.delta)
    assert cat.is_isomorphism(res.delta)


def test_snake_random_diagrams_are_exact():
    s = FgAbSampler(seed=3)
    for _ in range(25):
        res = snake(cat, s.random_snake_diagram())
        assert res.exact


def test_extended_snake_eight_term():
    s = FgAbSampler(seed=5)
    for _ in range(15):
        d = s.random_snake_diagram()
        # a deflation onto A1 glued on the left, a split inflation out
        # of B3 glued on the right
        a = s.deflation_onto(d.phi1.source)
        B3 = d.phi2p.target
        _, ib3, _, _, _ = cat.direct_sum(B3, s.random_group())
        ext = snake_extended(cat, d, a, ib3)
        assert ext.exact
        report = check_long_exact(
            cat, ext.morphisms(),
            [cat.admissible_factorization(f) for f in ext.morphisms()])
        assert report.ok, report.joints


def test_extended_snake_rejects_non_deflation_precomposition():
    d = mult_by_m_diagram(2)
    times3 = morphism(Z, Z, [[3]])     # injective, not a deflation
    with pytest.raises(Exception):
        snake_extended(cat, d, times3, cat.identity(d.f3.cokernel_object))


def test_inflation_cancellation():
    s = FgAbSampler(seed=9)
    for _ in range(20):
        i, p = s.random_ses()
        g = s.random_morphism(B=i.source)
        fac = cat.admissible_factorization(g)
        # if i o g is an inflation then g is: test on the inflation part
        composite = cat.compose(i, fac.inflation_part)
        assert is_inflation(cat, composite)
        pp, report = inflation_cancellation(cat, fac.inflation_part, i)
        assert report.ok if hasattr(report, "ok") else report


def test_induced_kernel_sequence_and_pullback_path():
    s = FgAbSampler(seed=13)
    for _ in range(20):
        phi1p, phi2p, phi1pp, phi2pp, g1, g2, g3 = s.random_axiom4_grid()
        res = induced_kernel_sequence(cat, phi1p, phi2p, phi1pp, phi2pp,
                                      g1, g2, g3)
        assert res.report, res.report.failures
        assert res.paths_agree is True   # fgab has pullbacks


def test_three_by_three_lemmas():
    s = FgAbSampler(seed=17)
    for _ in range(10):
        phi1p, phi2p, phi1pp, phi2pp, g1, g2, g3 = s.random_axiom4_grid()
        ks = induced_kernel_sequence(cat, phi1p, phi2p, phi1pp, phi2pp,
                                     g1, g2, g3)
        grid = GridDiagram3x3(
            phi1=ks.psi1, phi2=ks.psi2,
            phi1p=phi1p, phi2p=phi2p, phi1pp=phi1pp, phi2pp=phi2pp,
            f1=ks.k1, f2=ks.k2, f3=ks.k3, g1=g1, g2=g2, g3=g3)
        dual = three_by_three_dual(cat, grid)
        assert dual.report, dual.report.failures
        assert all(dual.identities.values()), dual.identities
        full = full_three_by_three(cat, grid)
        assert full.report, full.report.failures
        assert all(full.identities.values()), full.identities


def test_randomized_fgab_axioms_all_pass():
    reports = verify_axioms_randomized(cat, FgAbSampler(seed=1),
                                       samples=40, time_budget_s=60.0)
    for r in reports:
        assert r.status == PASS, (r.axiom, r.status, r.counterexample)


def test_check_long_exact_flags_a_gap():
    # Z --2--> Z --3--> Z/3 is not exact at the middle (im 2 != ker 3)
    C3 = cyclic_group(3)
    f = morphism(Z, Z, [[2]])
    g = morphism(Z, C3, [[3]])         # the zero map onto Z/3
    report = check_long_exact(
        cat, [f, g],
        [cat.admissible_factorization(f), cat.admissible_factorization(g)])
    assert not report.ok
