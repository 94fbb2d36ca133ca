import math

import pytest

from origami_quintic import Branch, FoldConfig, build_config, normalize_monic

HENDECAGON = (1.0, 1.0, -4.0, -3.0, 3.0, 1.0)

# its roots, from the closed form 2*cos(2*pi*i/11), i = 1..5
HENDECAGON_ROOTS = sorted(2.0 * math.cos(2.0 * math.pi * i / 11.0) for i in range(1, 6))


@pytest.fixture
def hendecagon():
    return normalize_monic(HENDECAGON)


@pytest.fixture
def hendecagon_config(hendecagon):
    return build_config(hendecagon)


def make_config(h, b, c, k, p, q, branch=Branch.PLUS, D=0.0):
    """Config straight from a parameter tuple (no inverse solve involved)."""
    return FoldConfig(h=h, b=b, c=c, k=k, p=p, q=q, branch=branch, D=D)
