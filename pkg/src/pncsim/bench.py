"""Backend benchmark behind the `pncsim bench` subcommand.

Times the batch kernels of the compiled extension against the pure-numpy
fallback on identical pre-drawn inputs, and verifies that both produce the
same outcomes.
"""

from __future__ import annotations

import sys
import time

import numpy as np

from . import backend, schemes
from .block_code import make_bch
from .phy import ChannelParams
from .schemes import SchemeKind
from .sources import CorrelationModel


def _time_backend(kernels, kind, code, params, model, trials, repeats=3):
    best = float("inf")
    result = None
    for rep in range(repeats):
        rng = np.random.default_rng(12345)
        start = time.perf_counter()
        result = schemes.simulate_batch(kind, code, params, model, rng, trials, kernels=kernels)
        best = min(best, time.perf_counter() - start)
    return best, result


def run(trials: int = 200_000, out=None):
    out = out or sys.stderr
    compiled = backend.load_backend("auto")
    fallback = backend.load_backend("python")
    have_compiled = compiled is not fallback

    code = make_bch(15, 5)
    model = CorrelationModel(code.n, code.t)
    params = ChannelParams.from_db(8.0)

    print(f"benchmark: {trials} exchanges per scheme, (15,5) code at 8 dB", file=out)
    print(f"{'scheme':<14}{'python [s]':>12}{'compiled [s]':>14}{'speedup':>9}  outcomes", file=out)
    for kind in SchemeKind:
        t_py, r_py = _time_backend(fallback, kind, code, params, model, trials)
        if have_compiled:
            t_c, r_c = _time_backend(compiled, kind, code, params, model, trials)
            same = np.array_equal(r_py[0], r_c[0]) and np.array_equal(r_py[1], r_c[1])
            print(
                f"{kind.value:<14}{t_py:>12.4f}{t_c:>14.4f}{t_py / t_c:>9.2f}"
                f"  {'identical' if same else 'MISMATCH'}",
                file=out,
            )
        else:
            print(f"{kind.value:<14}{t_py:>12.4f}{'-':>14}{'-':>9}  (compiled core not built)", file=out)
    if not have_compiled:
        print("note: install with a working Cython toolchain to build the compiled core", file=out)
