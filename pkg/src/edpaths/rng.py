"""Deterministic random streams.

Solvers draw all randomness from SplitMix64 (Steele, Lea & Flood 2014), a
64-bit generator with a fixed published algorithm, so results are identical
across platforms and Python versions. Per-trial streams are seeded with
``mix_seed(master_seed, trial_index)``; trials can therefore run in any order
or in parallel and still see the same bits.

Instance generation uses numpy's PCG64 with a ``SeedSequence`` keyed on
``(seed, purpose)``, which gives independent named streams.
"""
from __future__ import annotations

import numpy as np

MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _finalize(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


def mix_seed(master: int, index: int) -> int:
    """Derive the seed of sub-stream ``index`` from ``master``."""
    z = (master * _GOLDEN + (index + 1) * 0xD1B54A32D192ED03) & MASK64
    return _finalize(_finalize(z) ^ (index & MASK64))


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int) -> None:
        self.state = seed & MASK64

    def next(self) -> int:
        self.state = (self.state + _GOLDEN) & MASK64
        return _finalize(self.state)

    def bits(self, count: int) -> int:
        """Return ``count`` fair random bits packed into an int (bit i = draw i)."""
        words = (count + 63) // 64
        if words <= 16:
            raw = b"".join(self.next().to_bytes(8, "little") for _ in range(words))
        else:
            raw = self._block(words).astype("<u8").tobytes()
        return int.from_bytes(raw, "little") & ((1 << count) - 1)

    def _block(self, words: int) -> np.ndarray:
        # Same outputs as ``words`` calls to next(); uint64 arithmetic wraps mod 2**64.
        steps = np.arange(1, words + 1, dtype=np.uint64)
        z = np.uint64(self.state) + steps * np.uint64(_GOLDEN)
        self.state = (self.state + words * _GOLDEN) & MASK64
        z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        return z ^ (z >> np.uint64(31))

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``; modulo bias is below 2**-50 for small bounds."""
        return self.next() % bound


def numpy_stream(seed: int, purpose: str) -> np.random.Generator:
    """A PCG64 generator for one named purpose (``"graph"``, ``"terminals"``...)."""
    key = [seed & MASK64] + [ord(c) for c in purpose]
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(key)))
