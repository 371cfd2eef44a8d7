"""Exact truncated power series in q with integer coefficients.

Only what the eta-quotient generating functions need: products of
``f_k = prod_{i>=1} (1 - q^{ik})`` and their inverses.
"""

from __future__ import annotations

from functools import lru_cache
from math import gcd
from typing import Iterable, Sequence

DEFAULT_DEGREE = 100


class Series:
    """Coefficients ``c[0..N]`` of a power series truncated after ``q**N``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        self.coeffs = tuple(int(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, N: int) -> Series:
        return cls([1] + [0] * N)

    def __getitem__(self, n: int) -> int:
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Series({list(self.coeffs)!r})"

    def __mul__(self, other: Series) -> Series:
        return mul(self, other)

    def truncate(self, N: int) -> Series:
        return Series(self.coeffs[: N + 1])


def mul(a: Series, b: Series) -> Series:
    N = min(a.degree, b.degree)
    out = [0] * (N + 1)
    bc = b.coeffs
    for i, x in enumerate(a.coeffs[: N + 1]):
        if x:
            for j in range(N + 1 - i):
                out[i + j] += x * bc[j]
    return Series(out)


def inv(a: Series) -> Series:
    """Multiplicative inverse; the constant term must be +1 or -1."""
    c0 = a.coeffs[0]
    if c0 not in (1, -1):
        raise ValueError(f"constant term {c0} is not a unit")
    N = a.degree
    ac = a.coeffs
    out = [0] * (N + 1)
    out[0] = c0
    for n in range(1, N + 1):
        acc = sum(ac[i] * out[n - i] for i in range(1, n + 1))
        out[n] = -c0 * acc
    return Series(out)


@lru_cache(maxsize=1024)
def f(k: int, N: int) -> Series:
    """``prod_{i>=1} (1 - q^{ik})`` up to ``q**N``."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    c = [1] + [0] * N
    step = k
    while step <= N:
        # multiply in place by (1 - q^step), high degrees first
        for n in range(N, step - 1, -1):
            c[n] -= c[n - step]
        step += k
    return Series(c)


def eta_quotient(nums: Sequence[int], dens: Sequence[int], N: int) -> Series:
    """``prod f(k) for k in nums`` divided by ``prod f(k) for k in dens``."""
    out = Series.one(N)
    for k in nums:
        out = mul(out, f(k, N))
    for k in dens:
        out = mul(out, _inv_f(k, N))
    return out


@lru_cache(maxsize=1024)
def _inv_f(k: int, N: int) -> Series:
    return inv(f(k, N))


def lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def gf_regular_distinct(s: int, t: int, N: int = DEFAULT_DEGREE) -> Series:
    """Partitions that are s-regular and t-distinct: ``f_s f_t / (f_1 f_st)``."""
    return eta_quotient([s, t], [1, s * t], N)


def gf_regular_regular(s: int, t: int, N: int = DEFAULT_DEGREE) -> Series:
    return eta_quotient([s, t], [1, lcm(s, t)], N)


def gf_theorem9(s: int, t: int, N: int = DEFAULT_DEGREE) -> Series:
    """Partitions that are s-regular, t-regular and s-distinct, for ``s < t``."""
    if not s < t:
        raise ValueError(f"requires s < t, got s={s}, t={t}")
    L = lcm(s, t)
    return eta_quotient([s, t, s, s * L], [1, L, s * s, s * t], N)


def check_intermediate_identity(s: int, d: int, t: int, N: int = DEFAULT_DEGREE) -> bool:
    """Compare ``(f_t f_d / f_1 f_td) * (f_dt f_s / f_d f_st)`` with ``f_t f_s / f_1 f_st``."""
    if s % d:
        raise ValueError(f"{d} does not divide {s}")
    lhs = mul(eta_quotient([t, d], [1, t * d], N), eta_quotient([d * t, s], [d, s * t], N))
    return lhs == eta_quotient([t, s], [1, s * t], N)


def render(series: Series) -> str:
    return "\n".join(f"{n}: {c}" for n, c in enumerate(series.coeffs))
