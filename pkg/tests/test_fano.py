from collections import Counter
from itertools import combinations_with_replacement
from math import factorial, prod

import pytest

from hodgekit.core.fano import (
    CoverTarget,
    Emptiness,
    Positivity,
    canonical_descriptor,
    cover_bundles,
    emptiness_prediction,
    expected_dimension,
    fano_class,
    fano_profile,
    gp_dimension,
    incidence_codim,
    normal_bundle_euler,
)
from hodgekit.core.schubert import DEFAULT_SYM_BUDGET, dual_subbundle, grassmann_ring, sym_power_chern


@pytest.mark.parametrize(
    "key, gp_dim, codim, delta",
    [((5, 2, 1), 11, 5, 6), ((3, 2, 1), 7, 5, 2), ((2, 2, 1), 5, 5, 0), ((2, 3, 1), 6, 7, -1), ((3, 1, 1), 6, 3, 3)],
)
def test_dimensions(key, gp_dim, codim, delta):
    t = CoverTarget(*key)
    assert gp_dimension(t) == gp_dim
    assert incidence_codim(t) == codim
    assert expected_dimension(t) == delta
    assert normal_bundle_euler(t) == delta


def test_normal_bundle_matches_expected_dimension_everywhere():
    for n in range(2, 9):
        for d in range(1, 5):
            for r in range(1, min(3, n - 1) + 1):
                for m in (2, 3):
                    t = CoverTarget(n, d, r, m)
                    assert normal_bundle_euler(t) == expected_dimension(t)


def test_emptiness():
    assert emptiness_prediction(CoverTarget(5, 2, 1)) is Emptiness.NONEMPTY
    assert emptiness_prediction(CoverTarget(2, 2, 1)) is Emptiness.BOUNDARY
    assert emptiness_prediction(CoverTarget(2, 3, 1)) is Emptiness.EXPECT_EMPTY


@pytest.mark.parametrize(
    "key, grassmann_coeff, fiber_coeff, positivity",
    [
        ((3, 2, 1), 9, 6, Positivity.GENERAL_TYPE),
        ((5, 2, 1), 7, 6, Positivity.GENERAL_TYPE),
        ((9, 1, 1), -6, 3, Positivity.INDETERMINATE),
    ],
)
def test_canonical_descriptor(key, grassmann_coeff, fiber_coeff, positivity):
    c = canonical_descriptor(CoverTarget(*key))
    assert (c.grassmann_coeff, c.fiber_coeff, c.positivity) == (grassmann_coeff, fiber_coeff, positivity)
    assert c.mismatches() == []


def test_closed_form_mismatch_for_planes():
    c = canonical_descriptor(CoverTarget(5, 3, 2))
    assert (c.a, c.b) == (10, 56)
    mismatched = {m["coefficient"]: (m["engine"], m["published"]) for m in c.mismatches()}
    assert mismatched == {"a": (10, 11), "b": (56, 120)}


def test_extrapolated_covers_have_no_published_values():
    c = canonical_descriptor(CoverTarget(5, 2, 2, m=3))
    assert c.extrapolated
    assert c.published_a is None and c.published_b is None
    assert c.mismatches() == []


def test_profile():
    profile = fano_profile(CoverTarget(5, 2, 1))
    body = profile.to_dict()
    assert body["delta"] == 6
    assert body["verdict"] == "NONEMPTY"
    assert body["canonical"]["positivity"] == "GENERAL_TYPE"
    assert body["extrapolated"] is False


@pytest.mark.parametrize("key", [(3, 2, 0), (3, 2, 3), (3, 0, 1), (3, 2, 1, 1)])
def test_invalid_targets(key):
    with pytest.raises(ValueError):
        CoverTarget(*key)


def test_lines_on_a_double_plane():
    cls = fano_class(CoverTarget(2, 2, 1))
    assert cls.count == 56
    assert cls.report.agree
    assert cls.codim == grassmann_ring(1, 2).dim


def test_lines_on_a_double_solid_branched_in_a_quadric():
    cls = fano_class(CoverTarget(3, 1, 1))
    ring = grassmann_ring(1, 3)
    assert cls.codim == 1
    assert cls.pushed == ring.special(1) * 4
    assert cls.count is None


def test_class_vanishes_when_expected_empty():
    cls = fano_class(CoverTarget(2, 3, 1))
    assert cls.pushed.is_zero()
    assert cls.codim > grassmann_ring(1, 2).dim


def _minus_one_classes(points, max_degree):
    """Integer (e; m_1..m_k) with e^2 - sum m^2 = -1 and 3e - sum m = 1, 0 <= e <= max_degree."""
    found = 0
    for e in range(max_degree + 1):
        for ms in combinations_with_replacement(range(-e - 1, e + 2), points):
            if sum(ms) == 3 * e - 1 and sum(m * m for m in ms) == e * e + 1:
                # orderings of the multiset ms
                found += factorial(points) // prod(factorial(k) for k in Counter(ms).values())
    return found


def test_double_plane_count_matches_exceptional_curves():
    assert _minus_one_classes(7, 6) == 56
    assert fano_class(CoverTarget(2, 2, 1)).count == _minus_one_classes(7, 6)


def test_cubic_surface_count_matches_exceptional_curves():
    ring = grassmann_ring(1, 3)
    assert sym_power_chern(dual_subbundle(ring), 3).top().integral() == _minus_one_classes(6, 6)


@pytest.mark.parametrize("key", [(2, 2, 1), (3, 1, 1), (3, 2, 1), (4, 2, 2), (5, 2, 1)])
def test_cover_bundle_segre_classes_invert_chern(key):
    t = CoverTarget(*key)
    base, equations = cover_bundles(t, DEFAULT_SYM_BUDGET, None)
    ring = grassmann_ring(t.r, t.n)
    assert base.total() * base.total_segre() == ring.one()
    assert equations.total() * equations.total_segre() == ring.one()
    assert base.rank == 1 + sum(1 for _ in combinations_with_replacement(range(t.r + 1), t.d))
