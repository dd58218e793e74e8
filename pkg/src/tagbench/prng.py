"""Seeded 64-bit PRNG (splitmix64) for benchmark input generation and
fuzzing. The state advance is a plain counter, so the k-th output is a
closed-form function of the seed; batch.py exploits that to produce
bit-identical streams with numpy."""

from .words import M64

GOLDEN = 0x9E3779B97F4A7C15
MIX1 = 0xBF58476D1CE4E5B9
MIX2 = 0x94D049BB133111EB

DEFAULT_SEED = 1


def mix64(z):
    z = ((z ^ (z >> 30)) * MIX1) & M64
    z = ((z ^ (z >> 27)) * MIX2) & M64
    return z ^ (z >> 31)


def splitmix64(seed):
    """Yield an endless stream of uniform 64-bit words."""
    s = seed & M64
    while True:
        s = (s + GOLDEN) & M64
        yield mix64(s)


def uniform01(z):
    """Map a 64-bit word to a double in [0, 1) with 53 random bits."""
    return (z >> 11) * 2.0 ** -53


def uniform_stream(seed):
    for z in splitmix64(seed):
        yield uniform01(z)
