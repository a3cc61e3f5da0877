import json
import random
from fractions import Fraction

import pytest

from cdcalc import (
    Ambient,
    BoundStatus,
    Cone2D,
    ConeRay,
    CurveClass,
    LinearSeries,
    NSClass,
    bounds_from_json,
    bounds_to_json,
    contains,
    full_catalog,
    general_effective_cone_gm2,
    known_bounds,
    pair,
    ray_from_class,
    slope,
    subordinate_class,
)


def test_ray_canonical_form():
    ray = ConeRay(Fraction(-2), Fraction(18))
    assert (ray.theta, ray.x) == (Fraction(-1), Fraction(9))
    assert ConeRay(Fraction(0), Fraction(5)) == ConeRay(Fraction(0), Fraction(1))
    assert ConeRay(Fraction(3), Fraction(-9, 2)) == ConeRay(Fraction(1), Fraction(-3, 2))
    with pytest.raises(ValueError):
        ConeRay(Fraction(0), Fraction(0))


def test_ray_str():
    assert str(ConeRay(Fraction(1), Fraction(-3, 2))) == "1*theta - 3/2*x"
    assert str(ConeRay(Fraction(-1), Fraction(9))) == "-1*theta + 9*x"
    assert str(ConeRay(Fraction(0), Fraction(2))) == "1*x"


def test_slope():
    assert slope(ConeRay(Fraction(1), Fraction(-3, 2))) == Fraction(3, 2)
    assert slope(ConeRay(Fraction(0), Fraction(1))) is None
    for g in range(5, 15):
        assert slope(ConeRay(Fraction(g - 2), Fraction(-g))) == Fraction(g, g - 2)


def test_cone_deterministic_order():
    a = ConeRay(Fraction(-1), Fraction(9))
    b = ConeRay(Fraction(1), Fraction(-3, 2))
    assert Cone2D(a, b) == Cone2D(b, a)
    assert Cone2D(a, b).ray1 == b  # smaller slope first


def test_cone_rejects_proportional_rays():
    with pytest.raises(ValueError, match="degenerate"):
        Cone2D(ConeRay(Fraction(1), Fraction(-2)), ConeRay(Fraction(3), Fraction(-6)))
    with pytest.raises(ValueError, match="degenerate"):
        Cone2D(ConeRay(Fraction(1), Fraction(-2)), ConeRay(Fraction(-1), Fraction(2)))


def test_ray_from_class():
    amb = Ambient(6, 4)
    ray = ray_from_class(NSClass(amb, {(0, 1): -2, (1, 0): 18}))
    assert ray == ConeRay(Fraction(-1), Fraction(9))
    with pytest.raises(ValueError, match="pure degree 1"):
        ray_from_class(amb.theta() ** 2)
    with pytest.raises(ValueError):
        ray_from_class(amb.zero())


def test_contains_g6_examples():
    amb = Ambient(6, 4)
    cone = general_effective_cone_gm2(6)
    assert contains(cone, amb.theta())
    assert not contains(cone, amb.theta() - 2 * amb.x())
    assert contains(cone, cone.ray1)
    assert contains(cone, cone.ray2)
    assert contains(cone, amb.zero())
    with pytest.raises(ValueError, match="pure degree 1"):
        contains(cone, amb.one())


def test_contains_scaling_invariance():
    rng = random.Random(431)
    cone = general_effective_cone_gm2(7)
    amb = Ambient(7, 5)
    for _ in range(200):
        a = Fraction(rng.randint(-9, 9))
        b = Fraction(rng.randint(-9, 9))
        if a == 0 and b == 0:
            continue
        query = NSClass(amb, {(0, 1): a, (1, 0): b})
        scale = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        assert contains(cone, query) == contains(cone, scale * query)


def test_general_cone_rays():
    cone = general_effective_cone_gm2(6)
    assert {cone.ray1, cone.ray2} == {
        ConeRay(Fraction(-1), Fraction(9)),
        ConeRay(Fraction(1), Fraction(-3, 2)),
    }
    cone5 = general_effective_cone_gm2(5)
    assert {cone5.ray1, cone5.ray2} == {
        ConeRay(Fraction(-1), Fraction(7)),
        ConeRay(Fraction(1), Fraction(-5, 3)),
    }
    with pytest.raises(ValueError, match="g >= 5"):
        general_effective_cone_gm2(4)


def test_general_cone_slope_and_orthogonality_sweep():
    for g in range(5, 41):
        cone = general_effective_cone_gm2(g)
        non_diagonal = cone.ray1 if cone.ray1.theta > 0 else cone.ray2
        assert slope(non_diagonal) == Fraction(g, g - 2)
        assert Fraction(1) < slope(non_diagonal) < Fraction(2)
        # the bounding ray pairs to zero against the pencil-subordinate curve
        amb = Ambient(g, g - 2)
        gamma = subordinate_class(amb, LinearSeries(g - 1, 1))
        scaled = NSClass(amb, {(0, 1): g - 2, (1, 0): -g})
        assert pair(scaled, gamma) == 0


def test_known_bounds_trigonal():
    (entry,) = known_bounds(CurveClass.TRIGONAL, 8, 6)
    assert entry.ray == ConeRay(Fraction(1), Fraction(-2))
    assert entry.status is BoundStatus.PROVED_BOUNDARY


def test_known_bounds_hyperelliptic():
    (low,) = known_bounds(CurveClass.HYPERELLIPTIC, 8, 6)
    assert low.ray == ConeRay(Fraction(1), Fraction(-3))
    assert low.status is BoundStatus.PROVED_BOUNDARY
    (high,) = known_bounds(CurveClass.HYPERELLIPTIC, 8, 7)
    assert high.ray == ConeRay(Fraction(1), Fraction(-2))
    assert high.status is BoundStatus.PROVED_BOUNDARY


def test_known_bounds_general_statuses():
    (m1,) = known_bounds(CurveClass.GENERAL, 7, 5)
    assert m1.status is BoundStatus.PROVED_BOUNDARY
    assert slope(m1.ray) == Fraction(7, 5)
    (m2,) = known_bounds(CurveClass.GENERAL, 8, 4)
    assert m2.status is BoundStatus.EFFECTIVE_BOUND
    assert m2.ray == ConeRay(Fraction(1), Fraction(-2))
    (m3,) = known_bounds(CurveClass.GENERAL, 10, 4)
    assert m3.status is BoundStatus.VIRTUAL_BOUND
    assert slope(m3.ray) == Fraction(10, 4)


def test_known_bounds_plane_quintic():
    (entry,) = known_bounds(CurveClass.PLANE_QUINTIC, 6, 4)
    assert entry.status is BoundStatus.EXCLUSION
    assert entry.ray == ConeRay(Fraction(1), Fraction(-2))


def test_known_bounds_unsupported():
    with pytest.raises(ValueError, match="no catalogued bound"):
        known_bounds(CurveClass.TRIGONAL, 8, 5)
    with pytest.raises(ValueError, match="no catalogued bound"):
        known_bounds(CurveClass.GENERAL, 8, 5)  # odd gap
    with pytest.raises(ValueError, match="no catalogued bound"):
        known_bounds(CurveClass.GENERAL, 4, 2)  # g < 5
    with pytest.raises(ValueError, match="no catalogued bound"):
        known_bounds(CurveClass.PLANE_QUINTIC, 6, 3)
    with pytest.raises(ValueError, match="no catalogued bound"):
        known_bounds(CurveClass.HYPERELLIPTIC, 3, 1)


def test_full_catalog_contents():
    entries = full_catalog(6, 6)
    combos = {(e.curve, e.d) for e in entries}
    assert combos == {
        (CurveClass.HYPERELLIPTIC, 4),
        (CurveClass.HYPERELLIPTIC, 5),
        (CurveClass.TRIGONAL, 4),
        (CurveClass.GENERAL, 4),
        (CurveClass.GENERAL, 2),
        (CurveClass.PLANE_QUINTIC, 4),
    }
    with pytest.raises(ValueError):
        full_catalog(8, 6)


def test_catalog_json_round_trip():
    entries = full_catalog(5, 12)
    text = bounds_to_json(entries)
    assert bounds_from_json(text) == entries
    assert bounds_to_json(bounds_from_json(text)) == text  # byte-identical
    records = json.loads(text)
    assert list(records[0]) == ["curveClass", "g", "d", "rayTheta", "rayX", "status", "paperRef"]
    statuses = {r["status"] for r in records}
    assert statuses <= {"proved-boundary", "effective-bound", "virtual-bound", "exclusion"}
