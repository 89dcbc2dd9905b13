"""SplitMix64: a small, fully specified 64-bit generator.

state += 0x9E3779B97F4A7C15, then the output is mixed with the multipliers
0xBF58476D1CE4E5B9 and 0x94D049BB133111EB (shifts 30, 27, 31).  Using our own
generator rather than `random` pins every search result to the published
constants, independent of the Python version.
"""

from __future__ import annotations

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & MASK
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), by rejection."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n

    def fork(self, stream: int) -> "SplitMix64":
        """Independent generator for a numbered sub-search."""
        return SplitMix64(mix64((self.state + (stream + 1) * GAMMA) & MASK))
