"""Finite pointed sets: the non-additive instance.  Deflations default
to the injective-off-kernel class; the all-surjections class is kept
around as a contrast and fails several axioms (see test at the bottom)."""

import pytest

from wexact.core import check_short_exact, validate_factorization
from wexact.engine import PASS, FAIL, verify_axioms_exhaustive
from wexact.pointed import (ALL_SURJECTIONS, POINTED, PointedSetsInstance,
                            pointed_map, pointed_set)

cat = POINTED


def test_map_must_preserve_basepoint():
    A, B = pointed_set(2), pointed_set(2)
    with pytest.raises(Exception):
        pointed_map(A, B, [1, 0])
    f = pointed_map(A, B, [0, 1])
    assert f(1) == 1 and f(0) == 0


def test_kernel_is_basepoint_preimage():
    A, B = pointed_set(4), pointed_set(3)
    f = pointed_map(A, B, [0, 0, 1, 2])       # kills element 1
    K, k = cat.kernel(f)
    assert K.size == 2                          # {0, 1}
    assert cat.is_zero(cat.compose(f, k))
    image_of_kernel = {k(x) for x in range(K.size)}
    assert image_of_kernel == {0, 1}


def test_cokernel_collapses_the_image():
    A, B = pointed_set(2), pointed_set(4)
    f = pointed_map(A, B, [0, 2])
    C, c = cat.cokernel(f)
    assert C.size == 3                          # 4 points, one collapsed
    assert cat.is_zero(cat.compose(c, f))
    assert c(2) == 0


def test_deflation_class_is_injective_off_kernel():
    A, B = pointed_set(3), pointed_set(2)
    fold = pointed_map(A, B, [0, 1, 1])        # surjective, not injective
    assert not cat.is_deflation(fold)          # off its kernel {0}
    collapse = pointed_map(A, B, [0, 0, 1])
    assert cat.is_deflation(collapse)
    alt = PointedSetsInstance(ALL_SURJECTIONS)
    assert alt.is_deflation(fold)


def test_short_exact_sequence_fixture():
    A, B, C = pointed_set(2), pointed_set(3), pointed_set(2)
    i = pointed_map(A, B, [0, 1])
    p = pointed_map(B, C, [0, 0, 1])
    r = check_short_exact(cat, i, p)
    assert r, r.failures


def test_factorization_of_an_arbitrary_map():
    A, B = pointed_set(4), pointed_set(4)
    f = pointed_map(A, B, [0, 0, 2, 3])       # kills 1, injective off kernel
    fac = cat.admissible_factorization(f)
    validate_factorization(cat, fac)
    assert cat.equal(cat.compose(fac.inflation_part, fac.deflation_part), f)
    # non-admissible maps report None rather than raising
    g = pointed_map(A, B, [0, 0, 2, 2])       # folds off the kernel
    assert cat.admissible_factorization(g) is None


def test_pullback_of_deflation_exists_and_commutes():
    B, C = pointed_set(3), pointed_set(2)
    p = pointed_map(B, C, [0, 0, 1])
    f = pointed_map(pointed_set(2), C, [0, 1])
    pb = cat.pullback_of_deflation(p, f)
    assert cat.equal(cat.compose(p, pb.pr_left), cat.compose(f, pb.pr_right))
    assert cat.is_deflation(pb.pr_right)


def test_exhaustive_axioms_small_sizes():
    reports = verify_axioms_exhaustive(cat, max_size=3, time_budget_s=30.0)
    by_name = {r.axiom: r for r in reports}
    for name, r in by_name.items():
        if r.status == FAIL:
            # the one documented failure: pullbacks of deflations along
            # deflations leave the class (axiom 4a)
            assert "4a" in name, (name, r.counterexample)
            assert r.counterexample is not None
        else:
            assert r.status == PASS, (name, r.status)


def test_all_surjections_class_fails_composition_axioms():
    alt = PointedSetsInstance(ALL_SURJECTIONS)
    reports = verify_axioms_exhaustive(alt, max_size=3, time_budget_s=30.0)
    failed = {r.axiom for r in reports if r.status == FAIL}
    assert failed, "expected the naive class to fail at least one axiom"
