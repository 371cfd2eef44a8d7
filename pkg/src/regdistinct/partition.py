"""Sparse integer partitions: size -> frequency pairs, predicates and codecs."""

from __future__ import annotations

import json
import re
from collections.abc import Callable, Iterable, Iterator, Mapping

ENUMERATION_BOUND = 80


class PartitionError(ValueError):
    pass


class ParseError(PartitionError):
    pass


class DivisibilityError(PartitionError):
    pass


class InvalidModulus(PartitionError):
    pass


class DomainError(PartitionError):
    """An input partition is outside the set a map is defined on."""


def check_modulus(m: int) -> None:
    if not isinstance(m, int) or m < 2:
        raise InvalidModulus(f"modulus must be an integer >= 2, got {m!r}")


class Partition:
    """A partition stored as ``((size, freq), ...)`` with sizes strictly decreasing.

    Zero frequencies are never stored, so two equal multisets always have the
    same ``parts`` tuple; instances hash and compare by it.
    """

    __slots__ = ("parts", "_hash")

    def __init__(self, parts: Iterable[tuple[int, int]] = ()):
        parts = tuple((int(s), int(f)) for s, f in parts)
        prev = None
        for size, freq in parts:
            if size < 1 or freq < 1:
                raise PartitionError(f"sizes and frequencies must be positive: {(size, freq)}")
            if prev is not None and size >= prev:
                raise PartitionError("sizes must be strictly decreasing")
            prev = size
        self.parts = parts
        self._hash = hash(parts)

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> Partition:
        """Build from a size -> frequency mapping, dropping zero frequencies."""
        return cls(sorted(((s, f) for s, f in counts.items() if f), reverse=True))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> Partition:
        """Build from a flat list of parts in any order."""
        counts: dict[int, int] = {}
        for x in parts:
            counts[x] = counts.get(x, 0) + 1
        return cls.from_counts(counts)

    def counts(self) -> dict[int, int]:
        return dict(self.parts)

    def flat(self) -> list[int]:
        """Parts as a nonincreasing list, each size repeated by its frequency."""
        return [s for s, f in self.parts for _ in range(f)]

    @property
    def weight(self) -> int:
        return sum(s * f for s, f in self.parts)

    def __len__(self) -> int:
        return sum(f for _, f in self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Partition):
            return NotImplemented
        return self.parts == other.parts

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Partition) -> bool:
        return self.parts < other.parts

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)!r})"

    def __str__(self) -> str:
        return "(" + format_partition(self) + ")"


EMPTY = Partition()


def weight(p: Partition) -> int:
    return p.weight


def is_regular(p: Partition, m: int) -> bool:
    """True iff no part is divisible by ``m``."""
    check_modulus(m)
    return all(s % m for s, _ in p.parts)


def is_distinct(p: Partition, m: int) -> bool:
    """True iff every part appears fewer than ``m`` times."""
    check_modulus(m)
    return all(f < m for _, f in p.parts)


def merge(*ps: Partition) -> Partition:
    counts: dict[int, int] = {}
    for p in ps:
        for s, f in p.parts:
            counts[s] = counts.get(s, 0) + f
    return Partition.from_counts(counts)


def split_by_size(p: Partition, pred: Callable[[int], bool]) -> tuple[Partition, Partition]:
    yes = [(s, f) for s, f in p.parts if pred(s)]
    no = [(s, f) for s, f in p.parts if not pred(s)]
    return Partition(yes), Partition(no)


def split_frequency_residue(p: Partition, modulus: int) -> tuple[Partition, Partition]:
    """Split each frequency ``f`` into ``f % modulus`` and the multiple ``f - f % modulus``."""
    if modulus < 1:
        raise InvalidModulus(f"modulus must be positive, got {modulus}")
    residue, multiple = [], []
    for s, f in p.parts:
        r = f % modulus
        if r:
            residue.append((s, r))
        if f - r:
            multiple.append((s, f - r))
    return Partition(residue), Partition(multiple)


def scale_sizes(p: Partition, c: int) -> Partition:
    if c < 1:
        raise PartitionError(f"scale factor must be positive, got {c}")
    return Partition((s * c, f) for s, f in p.parts)


def divide_sizes(p: Partition, c: int) -> Partition:
    if c < 1:
        raise PartitionError(f"scale factor must be positive, got {c}")
    for s, _ in p.parts:
        if s % c:
            raise DivisibilityError(f"part {s} is not divisible by {c}")
    return Partition((s // c, f) for s, f in p.parts)


def scale_freqs(p: Partition, c: int) -> Partition:
    if c < 1:
        raise PartitionError(f"scale factor must be positive, got {c}")
    return Partition((s, f * c) for s, f in p.parts)


def divide_freqs(p: Partition, c: int) -> Partition:
    if c < 1:
        raise PartitionError(f"scale factor must be positive, got {c}")
    for s, f in p.parts:
        if f % c:
            raise DivisibilityError(f"frequency {f} of part {s} is not divisible by {c}")
    return Partition((s, f // c) for s, f in p.parts)


# -- enumeration -------------------------------------------------------------

def _check_bound(n: int, bound: int) -> None:
    if n < 0:
        raise PartitionError(f"n must be nonnegative, got {n}")
    if n > bound:
        raise PartitionError(f"n={n} exceeds the enumeration bound {bound}")


def _sparse(n: int, largest: int) -> Iterator[list[tuple[int, int]]]:
    if n == 0:
        yield []
        return
    for size in range(min(n, largest), 0, -1):
        for freq in range(n // size, 0, -1):
            head = (size, freq)
            for tail in _sparse(n - size * freq, size - 1):
                yield [head, *tail]


def enumerate_partitions(n: int, bound: int = ENUMERATION_BOUND) -> Iterator[Partition]:
    """Every partition of ``n`` exactly once, in reverse lexicographic order."""
    _check_bound(n, bound)
    for parts in _sparse(n, n):
        yield Partition(parts)


def _restricted(n: int, largest: int, regular: tuple[int, ...], cap: int
                ) -> Iterator[list[tuple[int, int]]]:
    if n == 0:
        yield []
        return
    for size in range(min(n, largest), 0, -1):
        if any(size % m == 0 for m in regular):
            continue
        for freq in range(min(n // size, cap), 0, -1):
            head = (size, freq)
            for tail in _restricted(n - size * freq, size - 1, regular, cap):
                yield [head, *tail]


def enumerate_restricted(n: int, regular: Iterable[int] = (), distinct: Iterable[int] = (),
                         bound: int = ENUMERATION_BOUND) -> Iterator[Partition]:
    """Partitions of ``n`` that are m-regular for every m in ``regular`` and
    m-distinct for every m in ``distinct``, generated with pruning.

    Same order as :func:`enumerate_partitions` restricted to the set.
    """
    _check_bound(n, bound)
    regular = tuple(regular)
    distinct = tuple(distinct)
    for m in regular + distinct:
        check_modulus(m)
    cap = min(distinct) - 1 if distinct else n
    for parts in _restricted(n, n, regular, cap):
        yield Partition(parts)


# -- codecs ------------------------------------------------------------------

_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse(text: str) -> Partition:
    """Parse ``"25,18^2,9"``; sizes must be strictly decreasing. Empty text is the empty partition."""
    text = text.strip()
    if text.startswith("(") and text.endswith(")"):
        text = text[1:-1].strip()
    if not text:
        return EMPTY
    parts = []
    for term in text.split(","):
        m = _TERM.match(term)
        if not m:
            raise ParseError(f"malformed term {term!r}")
        size = int(m.group(1))
        freq = int(m.group(2)) if m.group(2) is not None else 1
        if size < 1 or freq < 1:
            raise ParseError(f"sizes and frequencies must be positive in {term.strip()!r}")
        if parts and size >= parts[-1][0]:
            if size == parts[-1][0]:
                raise ParseError(f"repeated size {size}")
            raise ParseError("sizes must be listed in strictly decreasing order")
        parts.append((size, freq))
    return Partition(parts)


def format_partition(p: Partition) -> str:
    return ",".join(str(s) if f == 1 else f"{s}^{f}" for s, f in p.parts)


def to_json_obj(p: Partition) -> dict:
    return {"parts": [[s, f] for s, f in p.parts]}


def from_json_obj(obj: Mapping) -> Partition:
    try:
        parts = [(int(s), int(f)) for s, f in obj["parts"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad partition JSON: {exc}") from exc
    try:
        return Partition(parts)
    except PartitionError as exc:
        raise ParseError(str(exc)) from exc


def to_json(p: Partition) -> str:
    return json.dumps(to_json_obj(p))


def from_json(text: str) -> Partition:
    return from_json_obj(json.loads(text))
