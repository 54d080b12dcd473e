from __future__ import annotations

import os
import subprocess
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import graphs
from cott import _pykernels, kernels

try:
    from cott import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_compiled = pytest.mark.skipif(_ckernels is None, reason="compiled kernels not built")


def test_backend_is_reported():
    assert kernels.BACKEND in ("compiled", "python")
    if _ckernels is not None and os.environ.get("COTT_PURE_PYTHON", "") in ("", "0"):
        assert kernels.BACKEND == "compiled"


def test_environment_variable_forces_fallback():
    env = dict(os.environ, COTT_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import cott.kernels as k; print(k.BACKEND)"],
        env=env,
        capture_output=True,
        text=True,
        check=True,
    )
    assert out.stdout.strip() == "python"


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(graphs(max_n=8), st.integers(0, 255))
def test_simultaneous_search_backends_agree(g, loops):
    loops &= (1 << g.n) - 1
    adj = list(g.adj)
    assert _ckernels.sim_staircase_search(adj, g.n, loops) == _pykernels.sim_staircase_search(adj, g.n, loops)


@needs_compiled
@settings(max_examples=80, deadline=None)
@given(graphs(max_n=6), st.integers(0, 63))
def test_brute_force_backends_agree(g, loops):
    loops &= (1 << g.n) - 1
    adj = list(g.adj)
    assert _ckernels.sim_staircase_brute(adj, g.n, loops) == _pykernels.sim_staircase_brute(adj, g.n, loops)


@st.composite
def row_masks(draw):
    r = draw(st.integers(1, 7))
    c = draw(st.integers(1, 7))
    return draw(st.lists(st.integers(0, (1 << c) - 1), min_size=r, max_size=r)), r, c


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(row_masks())
def test_independent_search_backends_agree(data):
    rows, r, c = data
    a = _ckernels.ind_staircase_search(rows, r, c)
    b = _pykernels.ind_staircase_search(rows, r, c)
    assert (None if a is None else (list(a[0]), list(a[1]))) == (None if b is None else (list(b[0]), list(b[1])))


@needs_compiled
@settings(max_examples=150, deadline=None)
@given(graphs(max_n=9), graphs(max_n=5), st.booleans())
def test_induced_embedding_backends_agree(host, pattern, exact):
    a = _ckernels.induced_embedding(list(host.adj), host.n, list(pattern.adj), pattern.n, exact)
    b = _pykernels.induced_embedding(list(host.adj), host.n, list(pattern.adj), pattern.n, exact)
    assert (None if a is None else list(a)) == (None if b is None else list(b))
