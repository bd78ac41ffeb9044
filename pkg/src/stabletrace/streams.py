"""Deterministic, splittable random streams backed by counter-based Philox.

Every draw sequence is a pure function of (seed, stream_id, counter), so
results are bit-identical across runs, machines, and any parallel schedule
that assigns whole streams to workers.  Substreams are derived by mixing
indices into the stream id with a splitmix64 finalizer; distinct index
tuples give statistically independent Philox keys.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

_MASK64 = (1 << 64) - 1


def _splitmix64(z: int) -> int:
    # splitmix64 finalizer; full-avalanche 64-bit mix
    z = (z + 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


@dataclass(frozen=True)
class RngStream:
    """Value-type handle for one random stream.

    Streams are owned by a single consumer at a time; sharing happens only
    by deriving children with :meth:`child`.
    """

    seed: int
    stream_id: int = 0
    counter: int = 0

    def generator(self) -> np.random.Generator:
        """Fresh numpy Generator positioned at this stream's counter."""
        bitgen = np.random.Philox(key=[self.seed & _MASK64, self.stream_id & _MASK64])
        if self.counter:
            bitgen.advance(self.counter)
        return np.random.Generator(bitgen)

    def child(self, *indices: int) -> "RngStream":
        """Derive an independent substream from a tuple of integer indices."""
        sid = self.stream_id
        for ix in indices:
            sid = _splitmix64(sid ^ _splitmix64(ix & _MASK64))
        return RngStream(self.seed, sid, 0)

    def advanced(self, counter: int) -> "RngStream":
        return RngStream(self.seed, self.stream_id, self.counter + counter)
