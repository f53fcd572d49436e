import os
import random
import subprocess
import sys

import pytest

from chromix import _kernels
from chromix._kernels import reduce_boundary, reduce_boundary_compiled, reduce_boundary_python


def _random_cols(rng, n):
    return [sorted(rng.sample(range(j), rng.randint(0, min(j, 4)))) if j else [] for j in range(n)]


def test_fallback_reduces_a_triangle():
    # vertices 0..2, edges 3..5, triangle 6
    cols = [[], [], [], [0, 1], [0, 2], [1, 2], [3, 4, 5]]
    lows, R, V = reduce_boundary_python(cols, True)
    assert lows == [-1, -1, -1, 1, 2, -1, 5]
    assert R[5] == []
    assert V[5] == [3, 4, 5]


@pytest.mark.skipif(reduce_boundary_compiled is None, reason="compiled kernel not built")
@pytest.mark.parametrize("seed", range(10))
def test_backends_agree(seed):
    rng = random.Random(seed)
    cols = _random_cols(rng, 120)
    for track in (False, True):
        assert reduce_boundary_compiled(cols, track) == reduce_boundary_python(cols, track)


def test_default_backend_is_selected():
    assert _kernels.BACKEND in ("cython", "python")
    if _kernels.BACKEND == "cython":
        assert reduce_boundary is reduce_boundary_compiled
    else:
        assert reduce_boundary is reduce_boundary_python


def test_environment_forces_fallback():
    env = dict(os.environ, CHROMIX_PURE_PYTHON="1")
    r = subprocess.run([sys.executable, "-c", "import chromix; print(chromix.BACKEND)"],
                       capture_output=True, text=True, env=env)
    assert r.stdout.strip() == "python"
