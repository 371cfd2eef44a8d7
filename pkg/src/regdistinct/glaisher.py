"""Part-frequency matrices and Glaisher's map as an involution on all partitions.

For base ``m`` every part size factors uniquely as ``j * m**k`` with ``m`` not
dividing ``j``. The matrix ``M_j`` has row ``k`` equal to the ascending base-``m``
digits of the frequency of ``j * m**k``. Transposing every ``M_j`` is Glaisher's
map; on m-distinct partitions it is the classical m-distinct -> m-regular map.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .partition import (
    DomainError,
    DivisibilityError,
    Partition,
    check_modulus,
    is_distinct,
    is_regular,
)


def strip_power(n: int, m: int) -> tuple[int, int]:
    """Return ``(j, k)`` with ``n == j * m**k`` and ``m`` not dividing ``j``."""
    k = 0
    while n % m == 0:
        n //= m
        k += 1
    return n, k


def digits(n: int, m: int) -> list[int]:
    """Ascending base-``m`` digits of ``n`` (empty for 0)."""
    out = []
    while n:
        n, d = divmod(n, m)
        out.append(d)
    return out


@dataclass(frozen=True)
class PartFrequencyMatrixFamily:
    """Sparse family ``{core j: {(row k, col i): digit}}``; only nonzero digits are kept."""

    base: int
    matrices: dict[int, dict[tuple[int, int], int]] = field(default_factory=dict)

    def entry(self, core: int, row: int, col: int) -> int:
        return self.matrices.get(core, {}).get((row, col), 0)

    def dense(self, core: int, rows: int, cols: int) -> list[list[int]]:
        return [[self.entry(core, r, c) for c in range(cols)] for r in range(rows)]

    def transpose(self) -> PartFrequencyMatrixFamily:
        return PartFrequencyMatrixFamily(
            self.base,
            {j: {(c, r): d for (r, c), d in mat.items()} for j, mat in self.matrices.items()},
        )

    def total(self) -> int:
        m = self.base
        return sum(d * j * m**r * m**c
                   for j, mat in self.matrices.items() for (r, c), d in mat.items())

    def render(self) -> str:
        """Text layout: one block per core, digit rows indexed from 0."""
        blocks = []
        for j in sorted(self.matrices):
            mat = self.matrices[j]
            nrows = max(r for r, _ in mat) + 1
            ncols = max(c for _, c in mat) + 1
            lines = [f"M_{j} (base {self.base})"]
            lines += [" ".join(str(d) for d in row) for row in self.dense(j, nrows, ncols)]
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks)


def to_matrices(p: Partition, m: int) -> PartFrequencyMatrixFamily:
    check_modulus(m)
    matrices: dict[int, dict[tuple[int, int], int]] = {}
    for size, freq in p.parts:
        j, k = strip_power(size, m)
        row = matrices.setdefault(j, {})
        for i, d in enumerate(digits(freq, m)):
            if d:
                row[(k, i)] = d
    return PartFrequencyMatrixFamily(m, matrices)


def from_matrices(family: PartFrequencyMatrixFamily) -> Partition:
    m = family.base
    counts: dict[int, int] = {}
    for j, mat in family.matrices.items():
        for (r, c), d in mat.items():
            size = j * m**r
            counts[size] = counts.get(size, 0) + d * m**c
    return Partition.from_counts(counts)


def phi(p: Partition, m: int) -> Partition:
    """Glaisher's involution in base ``m``.

    Digit ``d`` of ``m**i`` in the frequency of ``j*m**k`` becomes ``d * m**k``
    extra copies of ``j*m**i``. Same result as transposing :func:`to_matrices`.
    """
    check_modulus(m)
    counts: dict[int, int] = {}
    for size, freq in p.parts:
        j, k = strip_power(size, m)
        scale = m**k
        part = j
        while freq:
            freq, d = divmod(freq, m)
            if d:
                counts[part] = counts.get(part, 0) + d * scale
            part *= m
    return Partition.from_counts(counts)


def wrap_shift(p: Partition, m: int) -> Partition:
    """Move every matrix entry one step diagonally: size * m, frequency / m.

    Defined when every frequency is divisible by ``m`` (empty first column).
    """
    if m < 1:
        raise ValueError(f"shift factor must be positive, got {m}")
    for s, f in p.parts:
        if f % m:
            raise DivisibilityError(f"frequency {f} of part {s} is not divisible by {m}")
    return Partition((s * m, f // m) for s, f in p.parts)


def unwrap_shift(p: Partition, m: int) -> Partition:
    if m < 1:
        raise ValueError(f"shift factor must be positive, got {m}")
    for s, _ in p.parts:
        if s % m:
            raise DivisibilityError(f"part {s} is not divisible by {m}")
    return Partition((s // m, f * m) for s, f in p.parts)


def require(p: Partition, regular: int | None = None, distinct: int | None = None) -> None:
    if regular is not None and not is_regular(p, regular):
        raise DomainError(f"input is not {regular}-regular")
    if distinct is not None and not is_distinct(p, distinct):
        raise DomainError(f"input is not {distinct}-distinct")


def double_glaisher(p: Partition, s: int, t: int) -> Partition:
    """``phi_s(phi_t(p))`` for coprime ``s``, ``t``: s-regular t-distinct -> t-regular s-distinct."""
    check_modulus(s)
    check_modulus(t)
    if gcd(s, t) != 1:
        raise ValueError(f"moduli {s} and {t} are not coprime")
    require(p, regular=s, distinct=t)
    return phi(phi(p, t), s)


def double_glaisher_inverse(p: Partition, s: int, t: int) -> Partition:
    check_modulus(s)
    check_modulus(t)
    if gcd(s, t) != 1:
        raise ValueError(f"moduli {s} and {t} are not coprime")
    require(p, regular=t, distinct=s)
    return phi(phi(p, s), t)
