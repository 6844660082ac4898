"""Bit-granular streams and the Elias gamma/delta integer codes.

All fields are written MSB-first, both within a value and within the
stream, so codewords look the same in dumps as they do on paper.  A
stream never pads itself; padding to a byte boundary happens only when
``BitWriter.getvalue`` exports the bits, and the true bit length stays
available through ``len``.
"""

from .errors import TruncatedStreamError


class BitWriter:
    """Append-only bit sink backed by a bytearray plus a partial byte."""

    __slots__ = ("_buf", "_acc", "_nacc")

    def __init__(self):
        self._buf = bytearray()
        self._acc = 0
        self._nacc = 0

    def write_bits(self, value: int, width: int) -> None:
        """Append ``value`` as exactly ``width`` bits, MSB first.

        ``width`` 0 is a legal no-op (``value`` must then be 0).
        """
        if width < 0:
            raise ValueError("bit width must be nonnegative")
        if value < 0 or value >> width:
            raise ValueError(f"value {value} does not fit in {width} bits")
        acc = (self._acc << width) | value
        nacc = self._nacc + width
        buf = self._buf
        while nacc >= 8:
            nacc -= 8
            buf.append((acc >> nacc) & 0xFF)
        self._acc = acc & ((1 << nacc) - 1)
        self._nacc = nacc

    def write_bit(self, bit: int) -> None:
        self.write_bits(bit, 1)

    def __len__(self) -> int:
        return len(self._buf) * 8 + self._nacc

    def getvalue(self) -> bytes:
        """Export the bits packed into bytes, zero-padded at the end."""
        out = bytes(self._buf)
        if self._nacc:
            out += bytes([(self._acc << (8 - self._nacc)) & 0xFF])
        return out

    def to01(self) -> str:
        """The stream as a '0'/'1' string, handy in tests and dumps."""
        tail = f"{self._acc:0{self._nacc}b}" if self._nacc else ""
        return "".join(f"{b:08b}" for b in self._buf) + tail


class BitReader:
    """Cursor over packed bits; raises TruncatedStreamError past the end."""

    __slots__ = ("_data", "_nbits", "_pos")

    def __init__(self, data: bytes, nbits: int | None = None):
        if nbits is None:
            nbits = 8 * len(data)
        elif nbits < 0 or nbits > 8 * len(data):
            raise ValueError("nbits does not match the buffer")
        self._data = data
        self._nbits = nbits
        self._pos = 0

    @property
    def position(self) -> int:
        return self._pos

    @property
    def remaining(self) -> int:
        return self._nbits - self._pos

    def read_bit(self) -> int:
        pos = self._pos
        if pos >= self._nbits:
            raise TruncatedStreamError("bit stream exhausted")
        self._pos = pos + 1
        return (self._data[pos >> 3] >> (7 - (pos & 7))) & 1

    def read_bits(self, width: int) -> int:
        if width < 0:
            raise ValueError("bit width must be nonnegative")
        pos = self._pos
        end = pos + width
        if end > self._nbits:
            raise TruncatedStreamError(
                f"needed {width} bits, stream has {self._nbits - pos}"
            )
        data = self._data
        acc = 0
        got = 0
        while got < width:
            byte_i, bit_i = divmod(pos + got, 8)
            take = min(8 - bit_i, width - got)
            chunk = (data[byte_i] >> (8 - bit_i - take)) & ((1 << take) - 1)
            acc = (acc << take) | chunk
            got += take
        self._pos = end
        return acc


def _check_positive(x: int) -> None:
    if x < 1:
        raise ValueError(f"universal codes are defined for integers >= 1, got {x}")


def gamma_length(x: int) -> int:
    _check_positive(x)
    return 2 * x.bit_length() - 1


def delta_length(x: int) -> int:
    _check_positive(x)
    b = x.bit_length()
    return (b - 1) + 2 * b.bit_length() - 1


def write_gamma(sink: BitWriter, x: int) -> None:
    """Gamma code: bitlen(x)-1 zeros, then x in binary (leading 1 included)."""
    _check_positive(x)
    b = x.bit_length()
    sink.write_bits(0, b - 1)
    sink.write_bits(x, b)


def write_delta(sink: BitWriter, x: int) -> None:
    """Delta code: gamma(bitlen(x)), then x without its leading 1 bit."""
    _check_positive(x)
    b = x.bit_length()
    write_gamma(sink, b)
    if b > 1:
        sink.write_bits(x & ((1 << (b - 1)) - 1), b - 1)


def gamma_encode(x: int) -> BitWriter:
    sink = BitWriter()
    write_gamma(sink, x)
    return sink


def delta_encode(x: int) -> BitWriter:
    sink = BitWriter()
    write_delta(sink, x)
    return sink


def gamma_decode(source: BitReader) -> int:
    """Inverse of write_gamma; consumes exactly one codeword."""
    zeros = 0
    while source.read_bit() == 0:
        zeros += 1
    if zeros == 0:
        return 1
    return (1 << zeros) | source.read_bits(zeros)


def delta_decode(source: BitReader) -> int:
    """Inverse of write_delta; consumes exactly one codeword."""
    b = gamma_decode(source)
    if b == 1:
        return 1
    return (1 << (b - 1)) | source.read_bits(b - 1)


def as_reader(bits) -> BitReader:
    """Accept a BitReader, BitWriter, or bytes and return a cursor."""
    if isinstance(bits, BitReader):
        return bits
    if isinstance(bits, BitWriter):
        return BitReader(bits.getvalue(), len(bits))
    return BitReader(bits)
