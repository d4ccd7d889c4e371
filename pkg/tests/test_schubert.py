from itertools import product
from math import comb

import pytest

from hodgekit.core.errors import BudgetExceededError, RingMismatchError
from hodgekit.core.schubert import (
    BundleData,
    ProjBundleRing,
    det_sym_multiplier,
    det_sym_multiplier_bruteforce,
    direct_sum,
    dual_subbundle,
    grassmann_ring,
    proj_pushforward,
    published_closed_form_a,
    published_closed_form_b,
    schubert_dual,
    sym_power_chern,
    sym_power_rank,
    tautological_bundles,
    twist_chern,
)


@pytest.fixture
def g13():
    return grassmann_ring(1, 3)


def test_ring_shape(g13):
    assert g13.dim == 4
    assert g13.rank == 6
    assert g13.box.parts == (2, 2)
    assert grassmann_ring(1, 3) is g13
    with pytest.raises(ValueError):
        grassmann_ring(3, 3)


def test_pieri_products(g13):
    s1 = g13.special(1)
    assert s1 * s1 == g13.special(2) + g13.elementary(2)
    assert s1 ** 4 == g13.schubert((2, 2), 2)
    assert (s1 ** 5).is_zero()
    assert g13.schubert((3,)).is_zero()


def test_littlewood_richardson_product():
    ring = grassmann_ring(3, 7)
    s21 = ring.schubert((2, 1))
    expected = (
        ring.schubert((4, 2)) + ring.schubert((4, 1, 1)) + ring.schubert((3, 3))
        + ring.schubert((3, 2, 1), 2) + ring.schubert((3, 1, 1, 1)) + ring.schubert((2, 2, 2))
        + ring.schubert((2, 2, 1, 1))
    )
    assert s21 * s21 == expected


def test_products_are_commutative_and_associative():
    ring = grassmann_ring(2, 5)
    classes = [ring.schubert(lam.parts) for lam in ring.basis]
    for a, b in product(classes, repeat=2):
        assert a * b == b * a
    for a, b, c in product(classes[1:], repeat=3):
        assert (a * b) * c == a * (b * c)


def test_products_are_truncated_by_the_box():
    ring = grassmann_ring(1, 4)
    s21 = ring.schubert((2, 1))
    assert s21 * s21 == ring.schubert((3, 3))


@pytest.mark.parametrize("r, n", [(1, 4), (1, 3), (2, 5), (1, 5), (2, 6), (3, 6)])
def test_poincare_duality(r, n):
    ring = grassmann_ring(r, n)
    for lam in ring.basis:
        dual = schubert_dual(lam, ring)
        for mu in ring.basis:
            if mu.size + lam.size != ring.dim:
                continue
            pairing = (ring.schubert(lam.parts) * ring.schubert(mu.parts)).integral()
            assert pairing == (1 if mu == dual else 0)


WHITNEY_CASES = [(r, n) for n in range(1, 252) for r in range(n) if comb(n + 1, r + 1) <= 252]


@pytest.mark.parametrize("r, n", WHITNEY_CASES)
def test_whitney_sum(r, n):
    ring = grassmann_ring(r, n)
    sub, quotient = tautological_bundles(ring)
    assert sub.total() * quotient.total() == ring.one()
    assert direct_sum(sub, quotient).total() == ring.one()


def test_dual_subbundle(g13):
    sdual = dual_subbundle(g13)
    assert sdual.rank == 2
    assert sdual.c(1) == g13.special(1)
    assert sdual.c(2) == g13.elementary(2)


def test_segre_classes_invert_chern(g13):
    _, quotient = tautological_bundles(g13)
    assert quotient.total() * quotient.total_segre() == g13.one()
    assert quotient.segre(1) == -g13.special(1)
    assert quotient.segre(2) == g13.elementary(2)


def test_sym_power_rank():
    assert sym_power_rank(2, 3) == 4
    assert sym_power_rank(3, 2) == 6
    assert sym_power_rank(0, 0) == 1


def test_first_power_is_the_bundle(g13):
    sdual = dual_subbundle(g13)
    assert sym_power_chern(sdual, 1).chern == sdual.chern


def test_lines_on_a_cubic_surface(g13):
    assert sym_power_chern(dual_subbundle(g13), 3).top().integral() == 27


def test_lines_on_a_quintic_threefold():
    ring = grassmann_ring(1, 4)
    assert sym_power_chern(dual_subbundle(ring), 5).top().integral() == 2875


def test_sym_power_first_chern_class():
    ring = grassmann_ring(2, 5)
    sdual = dual_subbundle(ring)
    for k in (2, 3):
        assert sym_power_chern(sdual, k, truncate_at=1).c(1) == ring.special(1) * det_sym_multiplier(3, k)


def test_twist(g13):
    twisted = twist_chern(BundleData.trivial(g13, 2), g13.special(1))
    assert twisted.c(1) == g13.special(1) * 2
    assert twisted.c(2) == g13.special(1) ** 2
    via_sym = sym_power_chern(dual_subbundle(g13), 1, twist=g13.special(1))
    assert via_sym.c(1) == g13.special(1) * 3


def test_budget(g13):
    with pytest.raises(BudgetExceededError):
        sym_power_chern(dual_subbundle(g13), 5, budget=5)
    with pytest.raises(ValueError):
        sym_power_chern(dual_subbundle(g13), 0)


def test_ring_mismatch(g13):
    other = grassmann_ring(1, 4)
    with pytest.raises(RingMismatchError):
        g13.special(1) + other.special(1)
    with pytest.raises(RingMismatchError):
        direct_sum(dual_subbundle(g13), dual_subbundle(other))


@pytest.mark.parametrize("m, k, expected", [(2, 3, 6), (3, 3, 10), (2, 6, 21), (3, 2, 4), (3, 4, 20), (1, 5, 5)])
def test_det_sym_multiplier(m, k, expected):
    assert det_sym_multiplier(m, k) == expected
    assert det_sym_multiplier_bruteforce(m, k) == expected


def test_closed_forms():
    for d in range(1, 6):
        assert published_closed_form_a(1, d) == det_sym_multiplier(2, d)
        assert published_closed_form_b(1, d) == det_sym_multiplier(2, 2 * d)
    # the quoted closed forms drift from the splitting principle once r > 1
    assert published_closed_form_a(2, 2) == det_sym_multiplier(3, 2)
    assert published_closed_form_a(2, 3) == 11 and det_sym_multiplier(3, 3) == 10
    assert published_closed_form_b(2, 2) == 26 and det_sym_multiplier(3, 4) == 20


def test_projective_bundle_pushforward():
    proj = ProjBundleRing(dual_subbundle(grassmann_ring(1, 4)))
    e = proj.e
    assert proj.push(proj.power(e - 1)) == proj.base.one()
    assert proj.push(proj.power(e - 2)).is_zero()
    assert proj.push(proj.power(e)) == -proj.bundle.c(1)
    for j in range(e + 4):
        assert proj.push(proj.power(j)) == proj.push_power(j)


def test_projective_bundle_multiply_and_guard():
    proj = ProjBundleRing(dual_subbundle(grassmann_ring(1, 3)))
    zeta = proj.zeta_power(1)
    assert proj.multiply(zeta, zeta) == proj.power(2)
    with pytest.raises(ValueError):
        proj.push(proj.zeta_power(2))
    assert proj_pushforward(proj, proj.zeta_power(2)) == -proj.bundle.c(1)


def test_class_serialization(g13):
    cls = g13.special(1) * 4 - g13.one()
    assert cls.to_dict() == {"0": -1, "1": 4}
    assert str(cls) == "-1 + 4*s(1)"
    assert cls.degrees() == [0, 1]
    assert len(cls.degrees()) == 2
    assert cls.truncated(0) == -g13.one()
