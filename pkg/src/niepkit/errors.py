"""Exception hierarchy shared by all niepkit modules.

The split mirrors how callers (notably the CLI) must react:

* ``RealizabilityError`` and subclasses are clean negatives, the input data
  simply does not satisfy a sufficient condition.
* ``StructureError`` / ``EnumerationCapError`` flag malformed or oversized
  inputs.
* ``VerificationError`` / ``EigensolveError`` signal internal failures that
  should never occur on valid constructions.
"""


class NiepError(Exception):
    """Base class for all niepkit errors."""


class RealizabilityError(NiepError):
    """A sufficient condition for the requested construction is not met."""


class PairingError(RealizabilityError):
    """A list violates the conjugate-pairing layout it is required to have."""


class MajorizationError(RealizabilityError):
    """The entrywise bound |c_ij| <= s_ij fails.

    ``positions`` holds the offending (i, j) index pairs.
    """

    def __init__(self, message, positions=()):
        super().__init__(message)
        self.positions = tuple(positions)


class StructureError(NiepError):
    """An input matrix does not have the required block structure."""


class EnumerationCapError(NiepError):
    """Exhaustive permutation enumeration was requested above the size cap."""


class VerificationError(NiepError):
    """A constructed matrix failed its independent spectrum check."""


class EigensolveError(NiepError):
    """The eigenvalue backend did not converge."""
