"""Counter-based pseudo-random generator.

The generator is SplitMix64 used in counter mode: draw ``i`` of a stream with
seed ``s`` is ``mix64(s + (i + 1) * GOLDEN)`` where ``mix64`` is the standard
SplitMix64 finalizer and ``GOLDEN = 0x9E3779B97F4A7C15``. All arithmetic is
modulo 2**64, so identical seeds produce identical streams on every platform,
draws can be vectorized over counter ranges, and the full generator state is
just ``(seed, counter)`` -- which is what checkpoints persist.
"""

from __future__ import annotations

import numpy as np
from scipy.special import ndtr, ndtri

from .errors import ContractError

GOLDEN = np.uint64(0x9E3779B97F4A7C15)

_MASK = np.uint64(0xFFFFFFFFFFFFFFFF)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)


def mix64(x: np.ndarray) -> np.ndarray:
    """SplitMix64 finalizer on uint64 arrays (wrapping arithmetic)."""
    z = x.astype(np.uint64)
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    return z ^ (z >> np.uint64(31))


class Rng:
    """A deterministic stream of draws addressed by a 64-bit counter.

    ``state()``/``restore()`` expose the (seed, counter) pair so consumers
    like the trainer can resume a stream mid-run bit-exactly.
    """

    def __init__(self, seed: int, counter: int = 0):
        self.seed = np.uint64(seed & 0xFFFFFFFFFFFFFFFF)
        self.counter = int(counter)

    def state(self) -> tuple[int, int]:
        return (int(self.seed), self.counter)

    @classmethod
    def restore(cls, state: tuple[int, int]) -> "Rng":
        return cls(state[0], state[1])

    def spawn(self, tag: int) -> "Rng":
        """Derive an independent stream; streams with distinct tags (or from
        distinct parents) do not overlap in practice."""
        derived = mix64(np.uint64([self.seed + GOLDEN * np.uint64((tag + 1) & 0xFFFFFFFFFFFFFFFF)]))
        return Rng(int(derived[0] ^ mix64(np.uint64([tag & 0xFFFFFFFFFFFFFFFF]))[0]))

    def _raw(self, n: int) -> np.ndarray:
        idx = np.arange(self.counter + 1, self.counter + n + 1, dtype=np.uint64)
        self.counter += n
        return mix64(self.seed + idx * GOLDEN)

    def uniform(self, size=None) -> np.ndarray | float:
        """Uniform float64 draws in [0, 1) with 53-bit resolution."""
        n = 1 if size is None else int(np.prod(size))
        u = (self._raw(n) >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)
        if size is None:
            return float(u[0])
        return u.reshape(size)

    def normal(self, size=None, std: float = 1.0) -> np.ndarray | float:
        """Standard-normal draws via Box-Muller (pairs consumed per draw)."""
        n = 1 if size is None else int(np.prod(size))
        half = (n + 1) // 2
        raw = self._raw(2 * half)
        # u1 in (0, 1] so the log is finite
        u1 = ((raw[:half] >> np.uint64(11)).astype(np.float64) + 1.0) * (2.0 ** -53)
        u2 = (raw[half:] >> np.uint64(11)).astype(np.float64) * (2.0 ** -53)
        r = np.sqrt(-2.0 * np.log(u1))
        z = np.concatenate([r * np.cos(2.0 * np.pi * u2), r * np.sin(2.0 * np.pi * u2)])[:n]
        z = z * std
        if size is None:
            return float(z[0])
        return z.reshape(size)

    def truncated_normal(self, size, std: float, clip: float = 2.0) -> np.ndarray:
        """Normal(0, std) conditioned on |x| <= clip*std, via inverse CDF.

        Rejection-free, so the number of counter increments is a pure
        function of ``size``.
        """
        lo, hi = ndtr(-clip), ndtr(clip)
        u = self.uniform(size)
        return ndtri(lo + u * (hi - lo)) * std

    def integers(self, n: int, size=None) -> np.ndarray | int:
        """Draws from {0, ..., n-1} (uniform up to 2**-53 granularity)."""
        if n <= 0:
            raise ContractError(f"integers() needs n >= 1, got {n}")
        u = self.uniform(size if size is not None else None)
        out = np.floor(np.asarray(u) * n).astype(np.int64)
        out = np.minimum(out, n - 1)  # guard the u -> 1.0 edge (unreachable, cheap)
        if size is None:
            return int(out)
        return out

    def permutation(self, n: int) -> np.ndarray:
        """Fisher-Yates permutation of range(n)."""
        out = np.arange(n)
        for i in range(n - 1, 0, -1):
            j = self.integers(i + 1)
            out[i], out[j] = out[j], out[i]
        return out

    def sample(self, n: int, k: int) -> list[int]:
        """k distinct indices from range(n), partial Fisher-Yates."""
        if k > n:
            raise ContractError(f"cannot sample {k} distinct items from {n}")
        pool = np.arange(n)
        for i in range(k):
            j = i + self.integers(n - i)
            pool[i], pool[j] = pool[j], pool[i]
        return [int(x) for x in pool[:k]]

    def choice(self, items, k: int) -> list:
        return [items[i] for i in self.sample(len(items), k)]
