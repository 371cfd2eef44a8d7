"""Bijection between s-regular t-distinct and t-regular s-distinct partitions.

Parts not divisible by the s-exclusive factor ``s'`` go through the coprime
double-Glaisher map. The rest is divided by ``s'`` ("wrapped") and handled one
shared prime ``p`` at a time; each prime step's output has its frequencies
multiplied by the running wrap factor, so the contributions of the steps sit in
separate digits of a mixed-radix frequency and can be peeled off again.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .glaisher import phi, require, unwrap_shift, wrap_shift
from .partition import (
    EMPTY,
    Partition,
    check_modulus,
    divide_freqs,
    divide_sizes,
    merge,
    scale_freqs,
    scale_sizes,
    split_by_size,
    split_frequency_residue,
)


class Variant(enum.Enum):
    PRIME_BASE = "prime"
    PRIME_POWER_BASE = "primepower"


def factorize(n: int) -> dict[int, int]:
    """Trial division; returns ``{prime: exponent}`` in ascending prime order."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True)
class SharedPrime:
    p: int
    e: int  # exponent of p in s
    b: int  # exponent of p in t
    k: int  # t / p**b

    @property
    def pe(self) -> int:
        return self.p**self.e

    @property
    def t(self) -> int:
        return self.p**self.b * self.k


@dataclass(frozen=True)
class ModulusPair:
    s: int
    t: int
    shared_primes: tuple[SharedPrime, ...]
    s_exclusive: int
    t_exclusive: int

    @property
    def complements(self) -> tuple[int, ...]:
        return tuple(sp.k for sp in self.shared_primes)

    def ordered(self, order: tuple[int, ...] | None) -> tuple[SharedPrime, ...]:
        """Shared primes rearranged to ``order`` (ascending when None)."""
        if order is None:
            return self.shared_primes
        by_prime = {sp.p: sp for sp in self.shared_primes}
        if sorted(order) != sorted(by_prime):
            raise ValueError(
                f"prime order {list(order)} is not a permutation of the shared primes "
                f"{sorted(by_prime)} of s={self.s}, t={self.t}")
        return tuple(by_prime[p] for p in order)


def analyze(s: int, t: int) -> ModulusPair:
    check_modulus(s)
    check_modulus(t)
    fs, ft = factorize(s), factorize(t)
    shared = tuple(SharedPrime(p, fs[p], ft[p], t // p ** ft[p]) for p in fs if p in ft)
    s_excl = 1
    for p, e in fs.items():
        if p not in ft:
            s_excl *= p**e
    t_excl = 1
    for p, c in ft.items():
        if p not in fs:
            t_excl *= p**c
    return ModulusPair(s, t, shared, s_excl, t_excl)


@dataclass(frozen=True)
class BijectionConfig:
    prime_order: tuple[int, ...] | None = None
    variant: Variant = Variant.PRIME_BASE


DEFAULT_CONFIG = BijectionConfig()


def prime_step(rho_source: Partition, sp: SharedPrime,
               variant: Variant = Variant.PRIME_BASE) -> tuple[Partition, Partition]:
    """One prime step on a wrapped, t-distinct partition.

    Returns ``(image, remainder)``: the image of the parts not divisible by
    ``p**e`` (t-regular and ``p**e``-distinct) and the untouched remaining parts,
    all of which are divisible by ``p**e``.
    """
    require(rho_source, distinct=sp.t)
    rho, remainder = split_by_size(rho_source, lambda x: x % sp.pe != 0)
    a_part, ck_part = split_frequency_residue(rho, sp.k)
    if a_part:
        a_img = phi(a_part, sp.k)
        a_img = phi(a_img, sp.p if variant is Variant.PRIME_BASE else sp.pe)
    else:
        a_img = EMPTY
    ck_img = phi(wrap_shift(ck_part, sp.k), sp.p)
    return merge(a_img, ck_img), remainder


def prime_step_inverse(image: Partition, sp: SharedPrime,
                       variant: Variant = Variant.PRIME_BASE) -> Partition:
    # a-branch sizes are never multiples of k, Ck-branch sizes always are
    if sp.k == 1:
        a_img, ck_img = EMPTY, image
    else:
        ck_img, a_img = split_by_size(image, lambda x: x % sp.k == 0)
    if a_img:
        a_part = phi(a_img, sp.p if variant is Variant.PRIME_BASE else sp.pe)
        a_part = phi(a_part, sp.k)
    else:
        a_part = EMPTY
    ck_part = unwrap_shift(phi(ck_img, sp.p), sp.k)
    return merge(a_part, ck_part)


@dataclass(frozen=True)
class Contribution:
    """One step's share of the output: ``image`` with frequencies already scaled by ``wrap``."""

    label: str
    wrap: int
    image: Partition


def forward_trace(p: Partition, s: int, t: int,
                  cfg: BijectionConfig = DEFAULT_CONFIG) -> list[Contribution]:
    """Per-step contributions of :func:`forward`; their merge is the image."""
    mp = analyze(s, t)
    primes = mp.ordered(cfg.prime_order)
    require(p, regular=s, distinct=t)
    sprime = mp.s_exclusive
    trace = []
    if sprime > 1:
        first, rest = split_by_size(p, lambda x: x % sprime != 0)
        trace.append(Contribution("s'", 1, phi(phi(first, t), sprime)))
        rest = divide_sizes(rest, sprime)
    else:
        rest = p
    wrap = sprime
    for sp in primes:
        image, rest = prime_step(rest, sp, cfg.variant)
        trace.append(Contribution(f"p={sp.p}", wrap, scale_freqs(image, wrap)))
        rest = divide_sizes(rest, sp.pe)
        wrap *= sp.pe
    assert not rest, "s-regular input leaves no remainder"
    return trace


def forward(p: Partition, s: int, t: int, cfg: BijectionConfig = DEFAULT_CONFIG) -> Partition:
    """Map an s-regular, t-distinct partition to a t-regular, s-distinct one."""
    return merge(*(c.image for c in forward_trace(p, s, t, cfg)))


def inverse(q: Partition, s: int, t: int, cfg: BijectionConfig = DEFAULT_CONFIG) -> Partition:
    """Inverse of :func:`forward` for the same ``s``, ``t`` and config."""
    mp = analyze(s, t)
    primes = mp.ordered(cfg.prime_order)
    require(q, regular=t, distinct=s)
    sprime = mp.s_exclusive
    recovered = []
    first, rest = split_frequency_residue(q, sprime)
    if first:
        recovered.append(phi(phi(first, sprime), t))
    wrap = sprime
    for sp in primes:
        digit, rest = split_frequency_residue(divide_freqs(rest, wrap), sp.pe)
        rest = scale_freqs(rest, wrap)
        recovered.append(scale_sizes(prime_step_inverse(digit, sp, cfg.variant), wrap))
        wrap *= sp.pe
    assert not rest
    return merge(*recovered)


def intermediate_pair(p: Partition, s: int, t: int, steps: int,
                      cfg: BijectionConfig = DEFAULT_CONFIG) -> tuple[Partition, Partition]:
    """Stop the map after ``steps`` steps (the s' step counts when s' > 1).

    Returns ``(lam, mu)``: ``mu`` merges the contributions made so far and
    ``lam`` is the not-yet-mapped remainder at its original scale.
    """
    mp = analyze(s, t)
    primes = mp.ordered(cfg.prime_order)
    require(p, regular=s, distinct=t)
    sprime = mp.s_exclusive
    mu = EMPTY
    done = 0
    if sprime > 1:
        if steps == 0:
            return p, EMPTY
        first, rest = split_by_size(p, lambda x: x % sprime != 0)
        mu = phi(phi(first, t), sprime)
        rest = divide_sizes(rest, sprime)
        done = 1
    else:
        rest = p
    wrap = sprime
    for sp in primes:
        if done == steps:
            break
        image, rest = prime_step(rest, sp, cfg.variant)
        mu = merge(mu, scale_freqs(image, wrap))
        rest = divide_sizes(rest, sp.pe)
        wrap *= sp.pe
        done += 1
    return scale_sizes(rest, wrap), mu
