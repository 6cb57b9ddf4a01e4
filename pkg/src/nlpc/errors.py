"""Exception hierarchy shared by all nlpc modules.

Every error carries a short machine-parsable ``category`` so the CLI can
emit a single-line diagnostic and a stable exit status.
"""

from __future__ import annotations


class NlpcError(Exception):
    """Base class for all nlpc errors."""

    category = "error"


class FormatError(NlpcError):
    """Unsupported or malformed input file (stereo WAV, wrong sample width...)."""

    category = "format"


class EmptyInputError(NlpcError):
    """Input too short to produce even one analysis frame."""

    category = "empty-input"


class SizeError(NlpcError):
    """Array sizes inconsistent with the requested operation."""

    category = "size"


class DegenerateFrameError(NlpcError):
    """Frame energy is zero or otherwise unusable for analysis."""

    category = "degenerate-frame"


class NumericalSingularityError(NlpcError):
    """A recursion or solve lost positive-definiteness mid-way."""

    category = "numerical-singularity"


class ConversionSingularError(NlpcError):
    """A reflection coefficient hit unit magnitude during tap conversion."""

    category = "conversion-singular"


class TrainingFailedError(NlpcError):
    """Training diverged or could not make progress.

    ``best_net`` holds the best parameters seen before failure, when any.
    """

    category = "training-failed"

    def __init__(self, message: str, best_net=None):
        super().__init__(message)
        self.best_net = best_net


class ArgumentError(NlpcError):
    """Bad CLI or API argument (index out of range, malformed list...)."""

    category = "argument"
