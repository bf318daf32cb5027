"""Hot loops, dispatched to the compiled extension when it is importable.

Set ``PERMBIN_PURE=1`` to force the pure-Python backend. Both backends are
always reachable through ``BACKENDS`` so tests and the benchmark can run
them side by side.
"""

from __future__ import annotations

import os

import numpy as np

from . import _pykernels
from .field import FieldCtx

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None


class Backend:
    def __init__(self, name: str, impl, compiled: bool):
        self.name = name
        self._impl = impl
        self._compiled = compiled

    def _zech(self, ctx: FieldCtx):
        return ctx.np_table("zech") if self._compiled else ctx.zech

    def _arr(self, xs):
        if self._compiled:
            return np.ascontiguousarray(xs, dtype=np.int64)
        return [int(x) for x in xs]

    def perm_check(self, ctx: FieldCtx, la: int, m0: int, lb: int, n0: int) -> bool:
        return bool(self._impl.perm_check(self._zech(ctx), ctx.qm1, la, m0, lb, n0))

    def perm_flags(self, ctx: FieldCtx, m0: int, n0: int, las, lbs) -> list[bool]:
        res = self._impl.perm_flags(self._zech(ctx), ctx.qm1, m0, n0, self._arr(las), self._arr(lbs))
        return [bool(x) for x in res]

    def mu_check(self, ctx: FieldCtx, q: int, n: int, d: int, la: int) -> bool:
        return bool(self._impl.mu_check(self._zech(ctx), ctx.qm1, q, n, d, la))

    def mu_flags(self, ctx: FieldCtx, q: int, n: int, d: int, las) -> list[bool]:
        res = self._impl.mu_flags(self._zech(ctx), ctx.qm1, q, n, d, self._arr(las))
        return [bool(x) for x in res]

    def table_logs(self, ctx: FieldCtx, la: int, m0: int, lb: int, n0: int) -> list[int]:
        res = self._impl.table_logs(self._zech(ctx), ctx.qm1, la, m0, lb, n0)
        return res.tolist() if self._compiled else res

    def count_zeros(self, ctx: FieldCtx, terms, xs, ys, skip_diag: bool) -> int:
        ti = self._arr([t[0] for t in terms])
        tj = self._arr([t[1] for t in terms])
        tc = self._arr([t[2] for t in terms])
        return int(self._impl.count_zeros(self._zech(ctx), ctx.qm1, ti, tj, tc,
                                          self._arr(xs), self._arr(ys), bool(skip_diag)))


BACKENDS: dict[str, Backend] = {"python": Backend("python", _pykernels, False)}
if _ckernels is not None:
    BACKENDS["cython"] = Backend("cython", _ckernels, True)

if os.environ.get("PERMBIN_PURE") or _ckernels is None:
    active = BACKENDS["python"]
else:
    active = BACKENDS["cython"]

BACKEND = active.name
