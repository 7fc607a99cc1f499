"""Deterministic 64-bit PRNG (splitmix64) for reproducible random forms.

The generator is pinned by its constants so that independent
reimplementations produce bit-identical streams:

    state += 0x9E3779B97F4A7C15
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB
    out = z ^ (z >> 31)

all arithmetic mod 2^64.  Field elements are drawn by rejection sampling
so they are exactly uniform on {0, ..., p-1}.
"""

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Stateful splitmix64 stream."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + _GAMMA) & _MASK
        return _mix(self.state)

    def next_below(self, bound: int) -> int:
        """Uniform integer in [0, bound) via rejection sampling."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        limit = ((1 << 64) // bound) * bound
        while True:
            v = self.next_u64()
            if v < limit:
                return v % bound

    def next_nonzero_below(self, bound: int) -> int:
        while True:
            v = self.next_below(bound)
            if v != 0:
                return v


def derive_seed(seed: int, *labels: int) -> int:
    """Deterministic sub-seed from a master seed and integer labels."""
    s = seed & _MASK
    for lab in labels:
        s = _mix((s + _GAMMA * (lab + 1)) & _MASK)
    return s
