from .errors import *  # noqa: F401,F403
from .mpoly import BETA, MPoly, VarId, parse
from .relem import (
    RElem,
    factor_tracked,
    factorial_power,
    lift,
    neg,
    ominus,
    oplus,
    substitute,
    symmetrize,
)
from .pfaffian import SquareSkewMatrix, determinant, pfaffian
