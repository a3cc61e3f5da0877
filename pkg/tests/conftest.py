"""Shared helpers: seeded random generators for classes and ambients."""

from fractions import Fraction

from cdcalc import Ambient, NSClass


def random_fraction(rng, span=9) -> Fraction:
    return Fraction(rng.randint(-span, span), rng.randint(1, span))


def random_ambient(rng, g_max=12, allow_excess=False) -> Ambient:
    g = rng.randint(2, g_max)
    d = rng.randint(1, g + 3 if allow_excess else g)
    return Ambient(g, d)


def random_class(rng, amb: Ambient, max_terms=4, degree=None) -> NSClass:
    """A sparse random class; homogeneous of the given degree when requested."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        if degree is None:
            i = rng.randint(0, amb.d)
            j = rng.randint(0, amb.d - i)
        else:
            i = rng.randint(0, degree)
            j = degree - i
        terms[(i, j)] = random_fraction(rng)
    return NSClass(amb, terms)
