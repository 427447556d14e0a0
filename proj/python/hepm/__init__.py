"""Closed forms, quadrature oracle and verification suite for h-elliptic parabolas."""

from ._hepm import *  # noqa: F401,F403
from ._hepm import ConfigError, DomainError, RegionSpecError  # noqa: F401
