import math

import numpy as np
import pytest

from gent.errors import BracketFailure
from gent.scalar_min import bracket_doubling, golden_section, grid_minimize


def test_golden_section_parabola():
    x, fx = golden_section(lambda t: (t - 1.7) ** 2 + 3.0, 0.0, 5.0, tol=1e-12)
    # argmin accuracy is limited to ~sqrt(eps) by flatness at the bottom
    assert x == pytest.approx(1.7, abs=1e-7)
    assert fx == pytest.approx(3.0, abs=1e-15)


def test_bracket_doubling_brackets_minimum():
    f = lambda t: (t - 40.0) ** 2
    a, b = bracket_doubling(f, 0.0, 0.1)
    assert a <= 40.0 <= b


def test_bracket_failure_on_monotone_decrease():
    with pytest.raises(BracketFailure):
        bracket_doubling(lambda t: -t, 0.0, 1.0, xmax=100.0)


def test_grid_minimize_refines():
    x, fx = grid_minimize(lambda t: np.abs(t - math.pi), 0.0, 10.0)
    assert x == pytest.approx(math.pi, abs=1e-8)
    assert fx < 1e-8
