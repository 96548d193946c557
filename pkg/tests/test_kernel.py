from __future__ import annotations

import os
import subprocess
import sys

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from skellim import kernel
from skellim.category import cyclic_group
from skellim.generate import random_lattice, random_sset
from skellim.homs import MapSearch
from skellim.simplicial.constructions import horn, std_simplex
from skellim.simplicial.nerve import nerve

compiled = pytest.importorskip("skellim._kernel")


def _both(search: MapSearch, limit=None):
    try:
        kernel.use("cython")
        a = np.asarray(search.raw_array(limit))
        kernel.use("python")
        b = np.asarray(search.raw_array(limit))
    finally:
        kernel.use("cython")
    return a, b


@given(st.integers(0, 5000), st.integers(0, 5000))
def test_backends_agree_on_random_searches(s1, s2):
    S = random_sset(s1, 4, 2)
    A = random_sset(s2, 6, 2)
    a, b = _both(MapSearch(S, A))
    assert np.array_equal(a, b)


@given(st.integers(0, 5000))
def test_backends_agree_with_limits_and_injectivity(seed):
    A = nerve(random_lattice(seed, 8))
    for kw in ({}, {"injective": True}):
        a, b = _both(MapSearch(std_simplex(2), A, **kw), limit=5)
        assert np.array_equal(a, b)


def test_backends_agree_on_truncated_group_nerve():
    G = nerve(cyclic_group(3), bound=4)
    a, b = _both(MapSearch(horn(3, 1), G))
    assert len(a) == 27
    assert np.array_equal(a, b)


def test_env_var_forces_python_backend():
    code = "import skellim; print(skellim.BACKEND)"
    env = dict(os.environ, SKELLIM_PURE="1")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    env.pop("SKELLIM_PURE")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "cython"


def test_unknown_backend_rejected():
    with pytest.raises(ValueError):
        kernel.use("fortran")
