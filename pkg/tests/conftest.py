import random

import pytest

from charcoords import QQ, LengthsCoord, eps_from_negatives
from charcoords.surface import EDGES, PUNCTURES

ONE_NEG = [{i} for i in PUNCTURES]
THREE_NEG = [set(PUNCTURES) - {i} for i in PUNCTURES]
TWO_NEG = [{i, j} for i in PUNCTURES for j in PUNCTURES if i < j]
NON_EXTREMAL = ONE_NEG + THREE_NEG + TWO_NEG
ALL_PATTERNS = [set()] + NON_EXTREMAL + [set(PUNCTURES)]


def random_rational(rng: random.Random, bound: int = 2**16):
    return QQ(rng.randint(1, bound), rng.randint(1, bound))


def random_coord(rng: random.Random, negatives, bound: int = 2**16) -> LengthsCoord:
    lam = {e: random_rational(rng, bound) for e in EDGES}
    return LengthsCoord.from_maps(
        lam, {i: (-1 if i in negatives else 1) for i in PUNCTURES}
    )


def random_triple_coord(rng: random.Random, negatives, bound: int = 2**16) -> LengthsCoord:
    """Witness-embedded coordinate with random pair quantities."""
    return LengthsCoord.from_pair_triple(
        random_rational(rng, bound),
        random_rational(rng, bound),
        random_rational(rng, bound),
        eps_from_negatives(negatives),
    )


@pytest.fixture
def rng():
    return random.Random(20240817)
