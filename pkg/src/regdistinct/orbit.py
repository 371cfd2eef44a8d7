"""Orbits of the iterated double-Glaisher step ``T = phi_s o phi_t``.

``T`` is a composition of two involutions, hence a permutation of the finite
set of partitions of ``n``: every orbit is a pure cycle through its start.
"""

from __future__ import annotations

import warnings
from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable

from .glaisher import phi
from .partition import (
    Partition,
    check_modulus,
    enumerate_restricted,
    format_partition,
    is_distinct,
    is_regular,
    to_json_obj,
)
from .qseries import gf_theorem9


def step_T(p: Partition, s: int, t: int) -> Partition:
    return phi(phi(p, t), s)


def in_target(p: Partition, s: int, t: int) -> bool:
    return is_regular(p, t) and is_distinct(p, s)


def in_source(p: Partition, s: int, t: int) -> bool:
    return is_regular(p, s) and is_distinct(p, t)


@dataclass(frozen=True)
class Success:
    ell: int


@dataclass(frozen=True)
class Cycle:
    length: int
    entry_index: int


@dataclass(frozen=True)
class Exhausted:
    max_iter: int


@dataclass
class OrbitReport:
    """``trajectory[0]`` is the start; ``trajectory[i]`` is ``T**i`` of it.

    On success the trajectory ends at the first target state; on a cycle it
    holds each state of the cycle once.
    """

    start: Partition
    s: int
    t: int
    trajectory: list[Partition]
    outcome: Success | Cycle | Exhausted
    half_step_hits: list[int] = field(default_factory=list)
    # True when no state strictly between start and the success state is back in the source set
    clean: bool = True

    def to_json_obj(self) -> dict:
        o = self.outcome
        if isinstance(o, Success):
            outcome = {"kind": "success", "ell": o.ell}
        elif isinstance(o, Cycle):
            outcome = {"kind": "cycle", "length": o.length, "entry_index": o.entry_index}
        else:
            outcome = {"kind": "exhausted", "max_iter": o.max_iter}
        return {
            "s": self.s,
            "t": self.t,
            "start": to_json_obj(self.start),
            "trajectory": [to_json_obj(p) for p in self.trajectory],
            "outcome": outcome,
            "half_step_hits": list(self.half_step_hits),
            "clean": self.clean,
        }

    def render(self) -> str:
        o = self.outcome
        lines = [f"orbit of ({format_partition(self.start)}) under phi_{self.s} o phi_{self.t}"]
        for i, p in enumerate(self.trajectory):
            mark = " *" if in_target(p, self.s, self.t) else ""
            lines.append(f"  T^{i}: ({format_partition(p)}){mark}")
        if isinstance(o, Success):
            lines.append(f"success: ell={o.ell}" + ("" if self.clean else " (passes back through the source set)"))
        elif isinstance(o, Cycle):
            lines.append(f"cycle: length={o.length}, entry_index={o.entry_index}; "
                         f"never {self.t}-regular and {self.s}-distinct")
        else:
            lines.append(f"exhausted after {o.max_iter} iterations")
        if self.half_step_hits:
            lines.append("half-step hits at iterations " + ", ".join(map(str, self.half_step_hits)))
        return "\n".join(lines)


def classify_orbit(p: Partition, s: int, t: int, max_iter: int | None = None) -> OrbitReport:
    check_modulus(s)
    check_modulus(t)
    if not in_source(p, s, t):
        warnings.warn(f"start is not {s}-regular and {t}-distinct", stacklevel=2)
    trajectory = [p]
    seen = {p: 0}
    half_hits = []
    clean = True
    state = p
    i = 0
    while True:
        if in_target(state, s, t):
            return OrbitReport(p, s, t, trajectory, Success(i), half_hits, clean)
        if i and in_source(state, s, t):
            clean = False
        if max_iter is not None and i >= max_iter:
            return OrbitReport(p, s, t, trajectory, Exhausted(max_iter), half_hits, clean)
        half = phi(state, t)
        if in_target(half, s, t):
            half_hits.append(i)
        state = phi(half, s)
        i += 1
        if state in seen:
            entry = seen[state]
            return OrbitReport(p, s, t, trajectory, Cycle(i - entry, entry), half_hits, clean)
        seen[state] = i
        trajectory.append(state)


@dataclass
class Census:
    s: int
    t: int
    n: int | None
    total: int = 0
    ell_histogram: Counter = field(default_factory=Counter)
    cycle_histogram: Counter = field(default_factory=Counter)
    half_step_hits: int = 0
    unclean: int = 0
    failures: list[Partition] = field(default_factory=list)
    expected_zero_count: int | None = None

    @property
    def zero_count(self) -> int:
        return self.ell_histogram.get(0, 0)

    @property
    def zero_count_agrees(self) -> bool | None:
        if self.expected_zero_count is None:
            return None
        return self.expected_zero_count == self.zero_count

    def add(self, report: OrbitReport) -> None:
        self.total += 1
        o = report.outcome
        if isinstance(o, Success):
            self.ell_histogram[o.ell] += 1
        elif isinstance(o, Cycle):
            self.cycle_histogram[o.length] += 1
            self.failures.append(report.start)
        else:
            self.failures.append(report.start)
        if report.half_step_hits:
            self.half_step_hits += 1
        if not report.clean:
            self.unclean += 1

    def to_json_obj(self) -> dict:
        return {
            "s": self.s,
            "t": self.t,
            "n": self.n,
            "total": self.total,
            "ell_histogram": {str(k): v for k, v in sorted(self.ell_histogram.items())},
            "cycle_histogram": {str(k): v for k, v in sorted(self.cycle_histogram.items())},
            "half_step_hits": self.half_step_hits,
            "unclean_successes": self.unclean,
            "failures": [to_json_obj(p) for p in self.failures],
            "expected_zero_count": self.expected_zero_count,
            "zero_count_agrees": self.zero_count_agrees,
        }

    def render(self) -> str:
        head = f"census s={self.s} t={self.t}" + (f" n={self.n}" if self.n is not None else "")
        rows = [head, f"  {'starts':<24}{self.total:>8}"]
        for ell, c in sorted(self.ell_histogram.items()):
            rows.append(f"  {'success ell=' + str(ell):<24}{c:>8}")
        for length, c in sorted(self.cycle_histogram.items()):
            rows.append(f"  {'cycle length=' + str(length):<24}{c:>8}")
        rows.append(f"  {'half-step hits':<24}{self.half_step_hits:>8}")
        rows.append(f"  {'unclean successes':<24}{self.unclean:>8}")
        if self.expected_zero_count is not None:
            verdict = "agrees" if self.zero_count_agrees else "DISAGREES"
            rows.append(f"  {'gf zero-step count':<24}{self.expected_zero_count:>8}  ({verdict})")
        if self.failures:
            rows.append("  failures:")
            rows += [f"    ({format_partition(p)})" for p in self.failures]
        return "\n".join(rows)


def census_of(starts: Iterable[Partition], s: int, t: int, n: int | None = None,
              max_iter: int | None = None) -> Census:
    out = Census(s, t, n)
    for p in starts:
        out.add(classify_orbit(p, s, t, max_iter))
    return out


def census(n: int, s: int, t: int, max_iter: int | None = None) -> Census:
    """Classify the orbit of every s-regular, t-distinct partition of ``n``."""
    check_modulus(s)
    check_modulus(t)
    out = census_of(enumerate_restricted(n, regular=(s,), distinct=(t,)), s, t, n, max_iter)
    if s < t:
        out.expected_zero_count = gf_theorem9(s, t, n)[n]
    return out
