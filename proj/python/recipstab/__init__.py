"""Exact-arithmetic verification toolkit for reciprocal-nonic and
reciprocal-decic functional equations (native extension re-export).

Rationals cross the boundary as "num/den" strings so every value stays
exact; parse them with fractions.Fraction when numeric work is needed.
"""

from _recipstab import *  # noqa: F401,F403
from _recipstab import __version__  # noqa: F401
