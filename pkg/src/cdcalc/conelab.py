"""Two-ray convex cones in the (theta, x)-plane and a catalog of cone bounds.

A divisor class a*theta + b*x on C_d is treated as the point (a, b); a cone
is spanned by two non-proportional rays and membership is decided by an
exact 2x2 linear solve, so boundary cases (the interesting ones) are never
blurred by rounding.  The catalog records, per curve class and symmetric
power, the best known restriction on the non-diagonal edge of the effective
cone, tagged by claim strength: a proved boundary ray, a bound by an honest
effective divisor, a bound by a virtual divisor, or the exclusion of a
direction from the cone.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .catalog import diagonal_class
from .nsring import Ambient, NSClass, format_rational

__all__ = [
    "BoundEntry",
    "BoundStatus",
    "Cone2D",
    "ConeRay",
    "CurveClass",
    "bounds_from_json",
    "bounds_to_json",
    "contains",
    "full_catalog",
    "general_effective_cone_gm2",
    "known_bounds",
    "ray_from_class",
    "slope",
]


@dataclass(frozen=True)
class ConeRay:
    """A direction a*theta + b*x, up to positive scaling.

    Stored in canonical form: both coefficients exact rationals, scaled so
    the first nonzero one is +1 or -1.
    """

    theta: Fraction
    x: Fraction

    def __post_init__(self) -> None:
        a, b = Fraction(self.theta), Fraction(self.x)
        if a == 0 and b == 0:
            raise ValueError("a ray needs a nonzero direction")
        scale = abs(a) if a != 0 else abs(b)
        object.__setattr__(self, "theta", a / scale)
        object.__setattr__(self, "x", b / scale)

    def __str__(self) -> str:
        pieces = []
        for coeff, name in ((self.theta, "theta"), (self.x, "x")):
            if coeff == 0:
                continue
            body = f"{format_rational(abs(coeff))}*{name}"
            if not pieces:
                pieces.append(("-" if coeff < 0 else "") + body)
            else:
                pieces.append((" - " if coeff < 0 else " + ") + body)
        return "".join(pieces)


def slope(ray: ConeRay) -> Fraction | None:
    """The t with ray proportional to theta - t*x, or None for the vertical ray."""
    if ray.theta == 0:
        return None
    return -ray.x / ray.theta


def _sort_key(ray: ConeRay) -> tuple[int, Fraction]:
    t = slope(ray)
    return (1, Fraction(0)) if t is None else (0, t)


@dataclass(frozen=True)
class Cone2D:
    """The cone of nonnegative combinations of two independent rays."""

    ray1: ConeRay
    ray2: ConeRay

    def __post_init__(self) -> None:
        det = self.ray1.theta * self.ray2.x - self.ray2.theta * self.ray1.x
        if det == 0:
            raise ValueError("degenerate cone: rays are proportional")
        if _sort_key(self.ray2) < _sort_key(self.ray1):
            first, second = self.ray2, self.ray1
            object.__setattr__(self, "ray1", first)
            object.__setattr__(self, "ray2", second)


def ray_from_class(c: NSClass) -> ConeRay:
    """The ray spanned by a divisor class."""
    a, b = _divisor_coeffs(c)
    return ConeRay(a, b)


def _divisor_coeffs(c: NSClass) -> tuple[Fraction, Fraction]:
    if c.is_zero():
        return (Fraction(0), Fraction(0))
    if c.pure_degree() != 1:
        raise ValueError(f"cone queries need a divisor class (pure degree 1), got {c}")
    return (c.coefficient(0, 1), c.coefficient(1, 0))


def contains(cone: Cone2D, query: NSClass | ConeRay) -> bool:
    """Whether the class lies in the cone, by exact 2x2 Cramer solve."""
    if isinstance(query, ConeRay):
        a, b = query.theta, query.x
    else:
        a, b = _divisor_coeffs(query)
    r1, r2 = cone.ray1, cone.ray2
    det = r1.theta * r2.x - r2.theta * r1.x
    s = (a * r2.x - r2.theta * b) / det
    t = (r1.theta * b - a * r1.x) / det
    return s >= 0 and t >= 0


def general_effective_cone_gm2(g: int) -> Cone2D:
    """Effective cone of C_{g-2} for a general curve of genus g >= 5.

    Spanned by the diagonal and by theta - (g/(g-2))*x; the latter pairs to
    exactly zero against the curve of divisors subordinate to a pencil of
    degree g-1, which is what pins it as a boundary.
    """
    if g < 5:
        raise ValueError(f"general-curve cone description needs g >= 5, got g={g}")
    diagonal = ray_from_class(diagonal_class(Ambient(g, g - 2)))
    other = ConeRay(Fraction(1), Fraction(-g, g - 2))
    return Cone2D(diagonal, other)


class CurveClass(str, Enum):
    GENERAL = "general"
    HYPERELLIPTIC = "hyperelliptic"
    TRIGONAL = "trigonal"
    PLANE_QUINTIC = "planeQuintic"


class BoundStatus(str, Enum):
    PROVED_BOUNDARY = "proved-boundary"
    EFFECTIVE_BOUND = "effective-bound"
    VIRTUAL_BOUND = "virtual-bound"
    EXCLUSION = "exclusion"


@dataclass(frozen=True)
class BoundEntry:
    """One catalogued restriction on the effective cone of C_d."""

    curve: CurveClass
    g: int
    d: int
    ray: ConeRay
    status: BoundStatus
    source: str


def known_bounds(curve: CurveClass, g: int, d: int) -> list[BoundEntry]:
    """Catalogued non-diagonal cone bounds for the given curve class and C_d.

    Raises for (curve, g, d) combinations the catalog says nothing about.
    """
    curve = CurveClass(curve)
    if curve is CurveClass.HYPERELLIPTIC and d >= 2 and d == g - 2:
        return [
            BoundEntry(curve, g, d, ConeRay(Fraction(1), Fraction(-3)),
                       BoundStatus.PROVED_BOUNDARY,
                       "non-diagonal boundary ray on C_(g-2), hyperelliptic curve")
        ]
    if curve is CurveClass.HYPERELLIPTIC and d >= 2 and d == g - 1:
        return [
            BoundEntry(curve, g, d, ConeRay(Fraction(1), Fraction(-2)),
                       BoundStatus.PROVED_BOUNDARY,
                       "non-diagonal boundary ray on C_(g-1), hyperelliptic curve")
        ]
    if curve is CurveClass.TRIGONAL and d >= 2 and d == g - 2:
        return [
            BoundEntry(curve, g, d, ConeRay(Fraction(1), Fraction(-2)),
                       BoundStatus.PROVED_BOUNDARY,
                       "non-diagonal boundary ray on C_(g-2), trigonal curve")
        ]
    if curve is CurveClass.GENERAL and g >= 5 and d >= 2 and (g - d) % 2 == 0 and d < g:
        m = (g - d) // 2
        status = {1: BoundStatus.PROVED_BOUNDARY, 2: BoundStatus.EFFECTIVE_BOUND}.get(
            m, BoundStatus.VIRTUAL_BOUND
        )
        source = {
            BoundStatus.PROVED_BOUNDARY:
                "boundary ray: pairs to zero against the pencil-subordinate curve class",
            BoundStatus.EFFECTIVE_BOUND:
                "bound by an honest effective divisor (secant behavior of the push-pull locus)",
            BoundStatus.VIRTUAL_BOUND:
                "bound by a virtual divisor class (push-pull of the moving-divisor locus)",
        }[status]
        return [BoundEntry(curve, g, d, ConeRay(Fraction(1), Fraction(-g, d)), status, source)]
    if curve is CurveClass.PLANE_QUINTIC and (g, d) == (6, 4):
        return [
            BoundEntry(curve, g, d, ConeRay(Fraction(1), Fraction(-2)),
                       BoundStatus.EXCLUSION,
                       "excluded direction: no effective divisor on C_4 is proportional to it")
        ]
    raise ValueError(f"no catalogued bound for ({curve.value}, g={g}, d={d})")


def full_catalog(g_min: int, g_max: int) -> list[BoundEntry]:
    """Every catalogued entry with genus in [g_min, g_max], deterministically ordered."""
    if g_min > g_max:
        raise ValueError(f"empty genus range [{g_min}, {g_max}]")
    entries: list[BoundEntry] = []
    for g in range(g_min, g_max + 1):
        for d in (g - 2, g - 1):
            if d >= 2:
                entries.extend(known_bounds(CurveClass.HYPERELLIPTIC, g, d))
        if g - 2 >= 2:
            entries.extend(known_bounds(CurveClass.TRIGONAL, g, g - 2))
        if g >= 5:
            for d in range(g - 2, 1, -2):
                entries.extend(known_bounds(CurveClass.GENERAL, g, d))
        if g == 6:
            entries.extend(known_bounds(CurveClass.PLANE_QUINTIC, 6, 4))
    entries.sort(key=lambda e: (e.curve.value, e.g, e.d))
    return entries


def bounds_to_json(entries: list[BoundEntry]) -> str:
    """Serialize catalog entries deterministically (fixed key order, canonical rationals)."""
    payload = [
        {
            "curveClass": e.curve.value,
            "g": e.g,
            "d": e.d,
            "rayTheta": format_rational(e.ray.theta),
            "rayX": format_rational(e.ray.x),
            "status": e.status.value,
            "paperRef": e.source,
        }
        for e in entries
    ]
    return json.dumps(payload, indent=2) + "\n"


def bounds_from_json(text: str) -> list[BoundEntry]:
    entries = []
    for record in json.loads(text):
        entries.append(
            BoundEntry(
                CurveClass(record["curveClass"]),
                int(record["g"]),
                int(record["d"]),
                ConeRay(Fraction(record["rayTheta"]), Fraction(record["rayX"])),
                BoundStatus(record["status"]),
                record["paperRef"],
            )
        )
    return entries
