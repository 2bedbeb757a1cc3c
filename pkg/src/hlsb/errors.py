"""Exception hierarchy for the hlsb package."""


class HlsbError(Exception):
    """Base class for all errors raised by hlsb."""


class ScalarError(HlsbError):
    """Illegal scalar operation (e.g. inverting a non-invertible element)."""


class RingMismatchError(ScalarError):
    """Two scalars from different parameter rings were combined."""


class ParseError(HlsbError):
    """A scalar expression or input file could not be parsed.

    Carries the offending text and a character position when available.
    """

    def __init__(self, message, text=None, pos=None):
        self.text = text
        self.pos = pos
        if text is not None and pos is not None:
            snippet = text[max(0, pos - 20):pos + 20]
            message = "%s (at position %d, near %r)" % (message, pos, snippet)
        super().__init__(message)


class ParityError(HlsbError):
    """A tensor or map entry violates the Z2-grading it is required to have."""


class DimensionMismatchError(HlsbError):
    """Objects over bases of incompatible dimensions were combined."""


class HypothesisError(HlsbError):
    """A construction was invoked on input that fails its hypotheses.

    The message names the first hypothesis that fails.
    """


class MorphismError(HlsbError):
    """A map claimed to be a (bi)algebra morphism is not one."""
