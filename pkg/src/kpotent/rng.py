"""SplitMix64: the fixed, seedable 64-bit generator behind sampled searches.

The stream for a given seed is part of the output contract, so censuses are
reproducible anywhere.  Bounded draws use fixed-point scaling of one 64-bit
draw ((u * bound) >> 64), i.e. rejection-free reduction on a 128-bit
intermediate.
"""

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """A draw in [0, bound) from a single 64-bit output."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return (self.next64() * bound) >> 64
