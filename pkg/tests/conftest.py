from fractions import Fraction as Q

import pytest

from homlie.hom_lie import HomLieAlgebra
from homlie.tensor import Matrix, Tensor3


@pytest.fixture
def heis3phi() -> HomLieAlgebra:
    """Heisenberg with the twist e1 -> e1 + e3: weakly involutive with
    phi^2 != Id, which is the combination the identity suites need and
    no builtin provides (the twist square moves e1 by a central vector)."""
    box = [[[Q(0)] * 3 for _ in range(3)] for _ in range(3)]
    box[0][1][2] = Q(1)
    box[1][0][2] = Q(-1)
    tw = Matrix([[Q(1), Q(0), Q(0)], [Q(0), Q(1), Q(0)], [Q(1), Q(0), Q(1)]])
    return HomLieAlgebra(Tensor3(box), tw, "heis3phi")
