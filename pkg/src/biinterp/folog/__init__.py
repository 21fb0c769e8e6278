from .ast import *  # noqa: F401,F403
from .engine import DEFAULT_BUDGET, definable_set, evaluate, naive_estimate  # noqa: F401
from .parser import parse_formula, rename_apart  # noqa: F401
