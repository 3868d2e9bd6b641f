"""Window calculus, kernel operators and spectrum envelopes."""

from ._specenv import *  # noqa: F401,F403
from ._specenv import __doc__  # noqa: F401

__version__ = "0.1.0"
