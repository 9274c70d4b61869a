"""Base context for p-adic computations over Q_p."""

from __future__ import annotations

from dataclasses import dataclass


def is_prime(m: int) -> bool:
    """Deterministic primality test (trial division; inputs are small)."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


@dataclass(frozen=True)
class PadicContext:
    """The prime p (residue field cardinality q = p) and the dimension n."""

    p: int
    n: int

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"p = {self.p} is not prime")
        if self.n < 1:
            raise ValueError(f"dimension n must be >= 1, got {self.n}")
