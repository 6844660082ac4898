"""Exception types shared across the codecs and the container format."""


class StreamError(Exception):
    """Base class for errors raised while reading encoded data."""


class TruncatedStreamError(StreamError):
    """The input ended in the middle of a codeword or fixed-width field."""


class CorruptStreamError(StreamError):
    """The input is well-formed bitwise but decodes to an impossible state."""
