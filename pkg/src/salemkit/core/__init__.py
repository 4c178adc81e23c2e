"""Numerical core with compile-time acceleration.

``salemkit.core._fast`` (Cython) is used when it imported cleanly and the
environment variable ``SALEMKIT_PURE`` is unset/0; otherwise the NumPy
implementation in ``salemkit.core.pure`` serves every call.  Both expose the
same function surface and agree to a few ulps; ``benchmarks/bench_cores.py``
compares their throughput.
"""

from __future__ import annotations

import os

from . import pure

_impl = pure
if os.environ.get("SALEMKIT_PURE", "0") not in ("1", "true", "yes"):
    try:
        from . import _fast as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = pure

IMPL_NAME: str = _impl.IMPL_NAME

BERNOULLI_EVEN = pure.BERNOULLI_EVEN
LANCZOS_G = pure.LANCZOS_G
LANCZOS_COEF = pure.LANCZOS_COEF

divisor_powers = _impl.divisor_powers
dirichlet_exp_sum = _impl.dirichlet_exp_sum
dirichlet_exp_sum_many = _impl.dirichlet_exp_sum_many
zeta_em_many = _impl.zeta_em_many
gamma_many = _impl.gamma_many
loggamma_many = _impl.loggamma_many


def implementations() -> dict:
    """Both cores keyed by name, for parity tests and benchmarks."""
    impls = {"pure": pure}
    try:
        from . import _fast

        impls["fast"] = _fast
    except ImportError:
        pass
    return impls
