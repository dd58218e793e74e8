"""64-bit word primitives: bit rotations, 3-bit tags, fixnums, and
IEEE754 binary64 bit conversion. Everything here is total over the full
pattern space and pure."""

import struct

M64 = (1 << 64) - 1
M32 = (1 << 32) - 1

SIGN_64 = 1 << 63
EXP_MASK_64 = 0x7FF0000000000000   # exponent bits 62-52
MANT_MASK_64 = 0x000FFFFFFFFFFFFF  # mantissa bits 51-0
QNAN_64 = 0x7FF8000000000000       # canonical quiet NaN

SIGN_32 = 1 << 31
EXP_MASK_32 = 0x7F800000           # exponent bits 30-23
MANT_MASK_32 = 0x007FFFFF          # mantissa bits 22-0

TAG_BITS = 3
TAG_MASK = (1 << TAG_BITS) - 1

FIXNUM_MIN = -(1 << 60)
FIXNUM_MAX = (1 << 60) - 1

_D = struct.Struct("<d")
_Q = struct.Struct("<Q")
_F = struct.Struct("<f")
_I = struct.Struct("<I")


def float_to_bits(x):
    return _Q.unpack(_D.pack(x))[0]


def bits_to_float(w):
    return _D.unpack(_Q.pack(w))[0]


def float_to_bits32(x):
    # rounds the host double to the nearest binary32 pattern
    return _I.unpack(_F.pack(x))[0]


def bits_to_float32(w):
    return _F.unpack(_I.pack(w))[0]


def _check_rot(s):
    if not 0 <= s <= 63:
        raise ValueError("rotation amount out of [0, 63]: %r" % (s,))


def rotl64(w, s):
    _check_rot(s)
    return ((w << s) | (w >> (64 - s))) & M64 if s else w


def rotr64(w, s):
    _check_rot(s)
    return ((w >> s) | (w << (64 - s))) & M64 if s else w


def rotl32(w, s):
    if not 0 <= s <= 31:
        raise ValueError("rotation amount out of [0, 31]: %r" % (s,))
    return ((w << s) | (w >> (32 - s))) & M32 if s else w


def rotr32(w, s):
    if not 0 <= s <= 31:
        raise ValueError("rotation amount out of [0, 31]: %r" % (s,))
    return ((w >> s) | (w << (32 - s))) & M32 if s else w


def tag_of(w):
    return w & TAG_MASK


def tag_set_mask(tags):
    """Pack an iterable of 3-bit tags into an 8-bit membership mask."""
    m = 0
    for t in tags:
        if not 0 <= t <= 7:
            raise ValueError("tag out of [0, 7]: %r" % (t,))
        m |= 1 << t
    return m


def has_tag_in_set(w, mask):
    """True iff tag_of(w) is a member of the mask (bit i set = tag i in)."""
    return (mask >> (w & TAG_MASK)) & 1 == 1


def repeat_mask(mask):
    """Replicate an 8-bit tag-set mask into all four bytes of a 32-bit word,
    the constant form used by byte-replicated membership tests."""
    if not 0 <= mask <= 0xFF:
        raise ValueError("tag-set mask out of [0, 255]: %r" % (mask,))
    return mask * 0x01010101


def encode_fixnum(v):
    """Small signed integer to an immediate word: v << 3, tag 000."""
    if not FIXNUM_MIN <= v <= FIXNUM_MAX:
        raise OverflowError("fixnum out of range: %d" % v)
    return (v << TAG_BITS) & M64


def decode_fixnum(w):
    if w & TAG_MASK:
        raise TypeError("not a fixnum word: tag %d" % (w & TAG_MASK))
    # arithmetic shift of the two's-complement pattern
    if w & SIGN_64:
        w -= 1 << 64
    return w >> TAG_BITS


def fixnum_add(a, b):
    """Direct word addition of two tag-000 fixnums."""
    v = decode_fixnum(a) + decode_fixnum(b)
    if not FIXNUM_MIN <= v <= FIXNUM_MAX:
        raise OverflowError("fixnum sum out of range: %d" % v)
    return (a + b) & M64


def fixnum_sub(a, b):
    v = decode_fixnum(a) - decode_fixnum(b)
    if not FIXNUM_MIN <= v <= FIXNUM_MAX:
        raise OverflowError("fixnum difference out of range: %d" % v)
    return (a - b) & M64


def exponent_prefix5(bits):
    """Top 5 bits of the binary64 exponent (bits 62-58); sign ignored."""
    return (bits >> 58) & 0x1F


def exponent_prefix4(bits):
    """Top 4 bits of the binary32 exponent (bits 30-27); sign ignored."""
    return (bits >> 27) & 0xF


def ieee_div(x, y):
    """Division with IEEE754 semantics on host floats. Python raises
    ZeroDivisionError for y == +-0.0; IEEE wants signed infinity (or a
    quiet NaN for 0/0 and NaN/0)."""
    if y != 0.0:
        return x / y
    if x != x or x == 0.0:
        return bits_to_float(QNAN_64)
    neg = (float_to_bits(x) ^ float_to_bits(y)) >> 63
    return float("-inf") if neg else float("inf")
