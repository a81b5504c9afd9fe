import random
from fractions import Fraction
from pathlib import Path

import pytest

from folnerlab.scalars import EXACT

REPO_ROOT = Path(__file__).resolve().parents[1]
SCHEMA_DIR = REPO_ROOT / "schemas"


@pytest.fixture
def rng():
    return random.Random(20240811)


def random_element(algebra, rng, labels, max_terms=4, complex_coeffs=True):
    """Seeded random nonzero element with support inside ``labels``."""
    labels = list(labels)
    while True:
        terms = {}
        for _ in range(rng.randint(1, max_terms)):
            label = rng.choice(labels)
            n = algebra.ring.dim(label)
            i, j = rng.randint(1, n), rng.randint(1, n)
            if algebra.mode == EXACT:
                re = Fraction(rng.randint(-9, 9), rng.randint(1, 4))
                im = Fraction(rng.randint(-3, 3), rng.randint(1, 3)) \
                    if complex_coeffs else Fraction(0)
                coeff = (re, im)
            else:
                coeff = complex(rng.randint(-9, 9), rng.randint(-3, 3) if complex_coeffs else 0)
            terms[(label, i, j)] = coeff
        a = algebra.element(terms)
        if not a.is_zero():
            return a


def small_support(algebra, rng, gens, max_terms=3):
    """Random element supported on {e} and the given generators."""
    labels = [algebra.ring.unit] + list(gens)
    return random_element(algebra, rng, labels, max_terms=max_terms)
