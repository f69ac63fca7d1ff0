"""Value objects for the convergence domain."""

from enum import Enum


class Verdict(Enum):
    """Whether the substituted seeds approximate the subshift."""

    CONVERGES = "converges"
    DIVERGES = "diverges"
