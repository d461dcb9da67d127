"""Exact rational arithmetic backend.

Everything in this package is computed with arbitrary-precision rationals,
and rational multiplication/normalization dominates the runtime of the hot
loops (switch sweeps, tree certification, orbit iteration).  When gmpy2 is
importable we use its compiled ``mpq`` type; otherwise we fall back to the
pure-Python ``fractions.Fraction``.  Set ``CHARCOORDS_PURE_PYTHON=1`` to
force the fallback (used by the backend benchmark).
"""

import os
from fractions import Fraction

if os.environ.get("CHARCOORDS_PURE_PYTHON"):
    QQ = Fraction
    BACKEND = "fractions"
else:
    try:
        from gmpy2 import mpq as QQ

        BACKEND = "gmpy2"
    except ImportError:  # pragma: no cover - exercised via env override
        QQ = Fraction
        BACKEND = "fractions"

ZERO = QQ(0)
ONE = QQ(1)
TWO = QQ(2)


def rat_str(r):
    """Serialize an exact rational as ``"p/q"`` (always with denominator)."""
    return f"{r.numerator}/{r.denominator}"


def parse_rat(s):
    """Parse ``"p/q"`` or a plain integer string into an exact rational."""
    s = s.strip()
    if "/" in s:
        num, den = s.split("/", 1)
        return QQ(int(num), int(den))
    return QQ(int(s))


def to_float(r):
    """Float value of a rational, robust against huge numerators."""
    try:
        return float(r)
    except OverflowError:
        num, den = int(r.numerator), int(r.denominator)
        shift = max(num.bit_length(), den.bit_length()) - 512
        num >>= shift
        den >>= shift
        if den == 0:
            return float("inf") if num >= 0 else float("-inf")
        return num / den
