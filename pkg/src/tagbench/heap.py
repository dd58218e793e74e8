"""Simulated heap arena for boxed floats and ballast.

Cells are 8-byte words; a float reached through a tagged pointer costs one
cell, a float behind a generic pointer costs two (header + payload). There
is no collector: handles are arena indices shifted left 3 with the handle
tag in the low bits, and they stay valid for the life of the heap.

Counter slots live in a plain list (heap._c) so the runtime's compiled
closures can update them without attribute lookups; the indices below are
the shared layout."""

from array import array
from dataclasses import dataclass

from .words import bits_to_float, float_to_bits

GENERIC_TAG = 1  # handle tag shared by every generic-pointer object

KIND_FLOAT = 0          # float cell reached through a tagged pointer
KIND_FLOAT_GENERIC = 1  # float cell with a header word
KIND_BALLAST = 2

DEFAULT_CAPACITY = 1 << 24  # cells

NEG_ZERO_BITS = 0x8000000000000000

# indices into SimHeap._c
C_FLOAT_ALLOCS = 0
C_FLOAT_BYTES = 1
C_OTHER_ALLOCS = 2
C_OTHER_BYTES = 3
C_SLOW_ENCODES = 4
C_FLIPS = 5
C_LAST_OUTCOME = 6  # 0 fast, 1 slow, 2 nothing encoded yet


@dataclass(frozen=True)
class HeapStats:
    float_allocs: int
    float_bytes: int
    other_allocs: int
    other_bytes: int
    slow_path_encodes: int
    representation_flips: int

    def as_dict(self):
        return {
            "float_allocs": self.float_allocs,
            "float_bytes": self.float_bytes,
            "other_allocs": self.other_allocs,
            "other_bytes": self.other_bytes,
            "slow_path_encodes": self.slow_path_encodes,
            "representation_flips": self.representation_flips,
        }


class SimHeap:
    """Arena of float cells and ballast with allocation accounting.

    Single-owner mutable state; distinct instances are independent."""

    def __init__(self, capacity=DEFAULT_CAPACITY):
        if capacity <= 0:
            raise ValueError("capacity must be positive")
        self.capacity = capacity
        self._payload = array("d")
        self._kinds = bytearray()
        self._tags = bytearray()
        self._cells = 0
        self._c = [0, 0, 0, 0, 0, 0, 2]
        self._zero_handles = None

    @property
    def cells_used(self):
        return self._cells

    @property
    def zero_handles(self):
        """(+0.0 handle, -0.0 handle) after preallocate_zeros, else None."""
        return self._zero_handles

    def alloc_float(self, bits, tag=None):
        """Store a float cell and return its handle word. tag is the
        tagged-pointer tag, or None for the generic-pointer layout
        (handle tagged GENERIC_TAG, one extra header word of cost)."""
        generic = tag is None
        if not generic and not 0 <= tag <= 7:
            raise ValueError("tag out of [0, 7]: %r" % (tag,))
        cost = 2 if generic else 1
        if self._cells + cost > self.capacity:
            raise MemoryError("simulated heap capacity exhausted")
        handle_tag = GENERIC_TAG if generic else tag
        idx = len(self._payload)
        self._payload.append(bits_to_float(bits))
        self._kinds.append(KIND_FLOAT_GENERIC if generic else KIND_FLOAT)
        self._tags.append(handle_tag)
        self._cells += cost
        c = self._c
        c[C_FLOAT_ALLOCS] += 1
        c[C_FLOAT_BYTES] += 16 if generic else 8
        return (idx << 3) | handle_tag

    def read_float(self, w):
        """Bit-exact payload of a float handle."""
        idx = w >> 3
        if idx >= len(self._payload):
            raise TypeError("not a live handle: 0x%016x" % w)
        kind = self._kinds[idx]
        if kind == KIND_BALLAST or self._tags[idx] != w & 7:
            raise TypeError("not a float handle: 0x%016x" % w)
        return float_to_bits(self._payload[idx])

    def cell_kind(self, idx):
        if idx >= len(self._kinds):
            raise IndexError("no such cell: %d" % idx)
        return self._kinds[idx]

    def preallocate_zeros(self, tag=None):
        """Allocate the +-0.0 cells once; returns their handle words."""
        if self._zero_handles is not None:
            raise RuntimeError("zeros already preallocated")
        pos = self.alloc_float(0, tag)
        neg = self.alloc_float(NEG_ZERO_BITS, tag)
        self._zero_handles = (pos, neg)
        return self._zero_handles

    def preload(self, nbytes):
        """Allocate one ballast vector of at least nbytes (rounded up to
        whole cells), counted under other_allocs/other_bytes."""
        if nbytes < 0:
            raise ValueError("negative preload: %d" % nbytes)
        if nbytes == 0:
            return
        ncells = (nbytes + 7) // 8
        if self._cells + ncells > self.capacity:
            raise MemoryError("simulated heap capacity exhausted")
        self._payload.frombytes(bytes(8 * ncells))
        self._kinds.extend(bytes([KIND_BALLAST]) * ncells)
        self._tags.extend(bytes([GENERIC_TAG]) * ncells)
        self._cells += ncells
        c = self._c
        c[C_OTHER_ALLOCS] += 1
        c[C_OTHER_BYTES] += 8 * ncells

    def reset_kernel_counters(self):
        """Zero the float/encode counters; ballast accounting and all
        allocated cells are retained."""
        c = self._c
        c[C_FLOAT_ALLOCS] = 0
        c[C_FLOAT_BYTES] = 0
        c[C_SLOW_ENCODES] = 0
        c[C_FLIPS] = 0
        c[C_LAST_OUTCOME] = 2

    def stats(self):
        c = self._c
        return HeapStats(
            float_allocs=c[C_FLOAT_ALLOCS],
            float_bytes=c[C_FLOAT_BYTES],
            other_allocs=c[C_OTHER_ALLOCS],
            other_bytes=c[C_OTHER_BYTES],
            slow_path_encodes=c[C_SLOW_ENCODES],
            representation_flips=c[C_FLIPS],
        )
