"""Search-kernel backend selection.

The compiled Cython extension is preferred when importable; the pure-Python
twin is the fallback and can be forced with RAMSEYKIT_PURE=1.  Both expose
the same functions with identical semantics (equivalence-tested), so the
choice only affects speed.
"""

import os

from . import pure

if os.environ.get("RAMSEYKIT_PURE", "") not in ("", "0"):
    _impl = pure
else:
    try:
        from . import _ext as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pure

BACKEND = _impl.BACKEND
ARROWS_TRUE = pure.ARROWS_TRUE
ARROWS_FALSE = pure.ARROWS_FALSE
ARROWS_INCONCLUSIVE = pure.ARROWS_INCONCLUSIVE

lemma1_pair = _impl.lemma1_pair
lemma1_scan = _impl.lemma1_scan
arrows_scan = _impl.arrows_scan

build_embed_plans = pure.build_embed_plans
triangular_edges = pure.triangular_edges
row_major_index = pure.row_major_index


def backends():
    """All importable backends, for equivalence tests and benchmarks."""
    out = {"pure": pure}
    try:
        from . import _ext
        out["compiled"] = _ext
    except ImportError:
        pass
    return out
