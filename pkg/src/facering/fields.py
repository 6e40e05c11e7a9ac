"""Exact scalar domains: prime fields F_p and the rationals.

Prime-field matrices are numpy int64 arrays with entries reduced to
``[0, p)``.  The default prime is 2**31 - 1, so a product of two reduced
entries stays below 2**62 and never overflows int64.  Rational matrices are
numpy object arrays holding ``gmpy2.mpq`` values (``fractions.Fraction``
when gmpy2 is unavailable).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

try:
    from gmpy2 import mpq as _rational
except ImportError:  # pragma: no cover - gmpy2 is an optional speedup
    _rational = Fraction

DEFAULT_PRIME = 2147483647  # 2**31 - 1, Mersenne prime

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def _is_prime(n: int) -> bool:
    # Deterministic Miller-Rabin; the witness set covers all n < 3.3e24.
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _SMALL_PRIMES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Declares the coefficient field: ``prime`` (F_p) or ``rationals``."""

    kind: str
    p: int | None = None

    @classmethod
    def prime(cls, p: int = DEFAULT_PRIME) -> "FieldSpec":
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        if p.bit_length() > 31:
            raise ValueError("prime must fit in 31 bits for overflow-free int64 arithmetic")
        return cls("prime", p)

    @classmethod
    def rationals(cls) -> "FieldSpec":
        return cls("rationals")

    @classmethod
    def parse(cls, text: str) -> "FieldSpec":
        """Parse a CLI field descriptor: ``q`` or ``p:<prime>``."""
        text = text.strip().lower()
        if text in ("q", "rationals", "qq"):
            return cls.rationals()
        if text.startswith("p:"):
            return cls.prime(int(text[2:]))
        raise ValueError(f"unrecognized field spec {text!r} (expected 'q' or 'p:<prime>')")

    @property
    def is_prime_field(self) -> bool:
        return self.kind == "prime"

    def __str__(self) -> str:
        return "q" if self.kind == "rationals" else f"p:{self.p}"

    # -- scalar/matrix construction --------------------------------------

    def matrix(self, rows) -> np.ndarray:
        """Coerce an integer array-like to this field's matrix dtype."""
        if self.is_prime_field:
            return np.asarray(rows, dtype=np.int64) % self.p
        a = np.asarray(rows, dtype=object)
        out = np.empty(a.shape, dtype=object)
        flat_out, flat_in = out.reshape(-1), a.reshape(-1)
        for k in range(flat_in.size):
            flat_out[k] = _rational(int(flat_in[k]))
        return out

    def zeros(self, shape) -> np.ndarray:
        if self.is_prime_field:
            return np.zeros(shape, dtype=np.int64)
        out = np.empty(shape, dtype=object)
        out.fill(_rational(0))
        return out

    def inverse(self, x):
        if self.is_prime_field:
            return pow(int(x), -1, self.p)
        return 1 / _rational(x)

    def reduce(self, mat: np.ndarray) -> np.ndarray:
        """Renormalize after arithmetic (mod p; no-op over the rationals)."""
        if self.is_prime_field:
            return mat % self.p
        return mat

    def random_nonzero(self, rng: np.random.Generator) -> int:
        """Uniform nonzero integer scalar; zero draws are rejected and redrawn.

        Over the rationals the draws come from a small symmetric range, which
        keeps later exact arithmetic cheap while remaining generic for the
        desk-scale inputs this package targets.
        """
        lo, hi = (0, self.p) if self.is_prime_field else (-99, 100)
        while True:
            x = int(rng.integers(lo, hi))
            if x != 0:
                return x
