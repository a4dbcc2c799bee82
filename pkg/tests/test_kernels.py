"""Numba kernels and their pure-numpy fallbacks must agree bit-for-bit.

The fallback is selected by setting RMTLAB_NO_NUMBA=1 before import, so
the comparison runs the fallback in a subprocess and diffs the arrays
against the in-process results.
"""
import os
import subprocess
import sys
import textwrap

import numpy as np
import pytest

from rmtlab import _kernels

_FIXTURE = textwrap.dedent("""
    import numpy as np
    from rmtlab import _kernels

    assert not _kernels.NUMBA_ENABLED, "fallback was not selected"
    rng = np.random.default_rng(12345)
    xs = np.linspace(-20.0, 30.0, 777)
    ai, aip = _kernels.airy_batch(xs)

    coeffs = rng.standard_normal(40)
    ts = rng.uniform(-1.0, 1.0, 500)
    clen = _kernels.clenshaw_batch(coeffs, ts)

    theta = np.sort(rng.uniform(0.0, 2.0 * np.pi, 64))
    seg = np.diff(np.concatenate([theta, [theta[0] + 2.0 * np.pi]]))
    g_left = rng.standard_normal(64)
    g_right = g_left + rng.standard_normal(64) * 0.1
    w1, shift = _kernels.w1_circle_solve(g_left, g_right, seg)

    np.savez(r"{out}", ai=ai, aip=aip, clen=clen,
             w1=np.array([w1]), shift=np.array([shift]))
""")


@pytest.fixture(scope="module")
def fallback_results(tmp_path_factory):
    out = tmp_path_factory.mktemp("kernels") / "fallback.npz"
    env = dict(os.environ, RMTLAB_NO_NUMBA="1")
    code = _FIXTURE.format(out=str(out))
    subprocess.run([sys.executable, "-c", code], check=True, env=env,
                   cwd=os.path.dirname(os.path.dirname(__file__)) or ".")
    return np.load(out)


def _reference_inputs():
    rng = np.random.default_rng(12345)
    xs = np.linspace(-20.0, 30.0, 777)
    coeffs = rng.standard_normal(40)
    ts = rng.uniform(-1.0, 1.0, 500)
    theta = np.sort(rng.uniform(0.0, 2.0 * np.pi, 64))
    seg = np.diff(np.concatenate([theta, [theta[0] + 2.0 * np.pi]]))
    g_left = rng.standard_normal(64)
    g_right = g_left + rng.standard_normal(64) * 0.1
    return xs, coeffs, ts, g_left, g_right, seg


def test_airy_kernel_parity(fallback_results):
    xs, *_ = _reference_inputs()
    ai, aip = _kernels.airy_batch(xs)
    assert np.array_equal(ai, fallback_results["ai"])
    assert np.array_equal(aip, fallback_results["aip"])


def test_clenshaw_kernel_parity(fallback_results):
    _, coeffs, ts, *_ = _reference_inputs()
    ours = _kernels.clenshaw_batch(coeffs, ts)
    assert np.array_equal(ours, fallback_results["clen"])


def test_w1_circle_kernel_parity(fallback_results):
    *_, g_left, g_right, seg = _reference_inputs()
    w1, shift = _kernels.w1_circle_solve(g_left, g_right, seg)
    assert w1 == fallback_results["w1"][0]
    assert shift == fallback_results["shift"][0]


def test_numba_flag_reflects_environment():
    # in-process: whatever the env says at import time
    expected = os.environ.get("RMTLAB_NO_NUMBA", "") not in ("1", "true", "yes")
    assert _kernels.NUMBA_ENABLED == expected


def test_clenshaw_matches_numpy_chebyshev():
    rng = np.random.default_rng(7)
    coeffs = rng.standard_normal(12)
    ts = np.linspace(-1, 1, 101)
    ours = _kernels.clenshaw_batch(coeffs, ts)
    ref = np.polynomial.chebyshev.chebval(ts, coeffs)
    assert np.max(np.abs(ours - ref)) < 1e-12
