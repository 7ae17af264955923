"""Deterministic random instance generation.

A splitmix64 stream drives all sampling, so a (kind, m, n, seed) tuple
yields the same instance on every platform and Python version.  Kinds
mirror the structured classes the solvers target: ``general``, ``rank{p}``
(exact rank p by construction), ``additive``, ``nonnegative``, and
``sparse-negative{k}`` (at most k negative entries, hence a negative
eliminator of size at most k).
"""

from __future__ import annotations

import re

from .analysis import rank_factorize
from .model import Instance

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 generator: a 64-bit state advanced by a fixed odd
    constant, with an avalanche mix on output."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in [lo, hi], rejection-sampled to avoid bias."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        span = hi - lo + 1
        limit = ((1 << 64) // span) * span
        while True:
            u = self.next_u64()
            if u < limit:
                return lo + u % span


_KIND_RE = re.compile(r"^(general|additive|nonnegative|rank(\d+)|sparse-negative(\d+)?)$")


def generate_instance(
    kind: str, m: int, n: int, seed: int, *, value_range: int = 10
) -> Instance:
    """Deterministic instance of the requested structural kind.

    Entries are integers in [-value_range, value_range] (nonnegative kinds
    clamp the matrix at 0).  ``rank{p}`` multiplies random m x p and p x n
    factors and resamples until the rank is exactly p; ``sparse-negative{k}``
    plants exactly k negative entries in an otherwise nonnegative matrix
    (capped at m*n).
    """
    if m < 1 or n < 1:
        raise ValueError(f"dimensions must be positive, got {m} x {n}")
    if value_range < 1:
        raise ValueError("value_range must be at least 1")
    match = _KIND_RE.match(kind)
    if not match:
        raise ValueError(
            f"unknown kind {kind!r}; expected general, rank<p>, additive, "
            f"nonnegative, or sparse-negative<k>"
        )
    rng = SplitMix64(seed)
    r = value_range

    def vec(size: int, lo: int, hi: int) -> list[int]:
        return [rng.randint(lo, hi) for _ in range(size)]

    def mat(rows: int, cols: int, lo: int, hi: int) -> list[list[int]]:
        return [vec(cols, lo, hi) for _ in range(rows)]

    base = match.group(1)
    if base == "general":
        q = mat(m, n, -r, r)
    elif base == "additive":
        a = vec(m, -r, r)
        b = vec(n, -r, r)
        q = [[ai + bj for bj in b] for ai in a]
    elif base == "nonnegative":
        q = mat(m, n, 0, r)
    elif base.startswith("sparse-negative"):
        k = int(match.group(3)) if match.group(3) else 3
        k = min(k, m * n)
        q = mat(m, n, 0, r)
        planted: set[tuple[int, int]] = set()
        while len(planted) < k:
            cell = (rng.randint(0, m - 1), rng.randint(0, n - 1))
            if cell not in planted:
                planted.add(cell)
                q[cell[0]][cell[1]] = rng.randint(-r, -1)
    else:
        p = int(match.group(2))
        if p > min(m, n):
            raise ValueError(f"rank {p} impossible for a {m} x {n} matrix")
        if p == 0:
            q = [[0] * n for _ in range(m)]
        else:
            while True:
                left = mat(m, p, -r, r)
                right = mat(p, n, -r, r)
                q = [
                    [sum(left[i][k] * right[k][j] for k in range(p)) for j in range(n)]
                    for i in range(m)
                ]
                if p == 1:
                    if any(v for row in left for v in row) and any(
                        v for row in right for v in row
                    ):
                        break
                elif rank_factorize(q).p == p:
                    break
    c = vec(m, -r, r)
    d = vec(n, -r, r)
    c0 = rng.randint(-r, r)
    return Instance(q, c, d, c0)
