"""Exception hierarchy for the cavitypair package.

Configuration problems and numerical-contract violations are kept distinct
so the command line layer can map them to different exit codes.
"""

from __future__ import annotations


class CavityPairError(Exception):
    """Base class for all package errors."""


class ConfigError(CavityPairError):
    """A user-supplied parameter or configuration file is invalid."""


class ResourceLimitError(CavityPairError):
    """A requested computation exceeds a hard size limit."""


class NumericsError(CavityPairError):
    """A numerical invariant was violated beyond tolerance."""


class PsdViolationError(NumericsError):
    """A density matrix eigenvalue is negative beyond repairable dust."""


class TruncationLeakError(NumericsError):
    """State population leaked into Fock levels cut off by truncation."""
