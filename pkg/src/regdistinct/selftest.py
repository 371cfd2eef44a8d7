"""The worked examples from the literature, runnable as a quick self-check."""

from __future__ import annotations

from collections.abc import Callable

from .bijection import BijectionConfig, forward, inverse
from .glaisher import double_glaisher, phi, to_matrices
from .orbit import Cycle, Success, classify_orbit, in_target, step_T
from .partition import parse


def _glaisher_example() -> bool:
    a, b = parse("108,18^4"), parse("3^60")
    return phi(a, 6) == b and phi(b, 6) == a


def _matrix_figure() -> bool:
    fam = to_matrices(parse("20,5^2,4,2^2,1^5"), 2)
    return (
        fam.dense(1, 3, 3) == [[1, 0, 1], [0, 1, 0], [1, 0, 0]]
        and fam.dense(3, 3, 3) == [[0, 0, 0]] * 3
        and fam.dense(5, 3, 3) == [[0, 1, 0], [0, 0, 0], [1, 0, 0]]
        and set(fam.matrices) == {1, 5}
    )


def _small_phis() -> bool:
    return (
        phi(parse("15"), 3) == parse("5^3")
        and phi(parse("50"), 10) == parse("5^10")
        and phi(parse("25"), 3) == parse("25")
    )


def _double_glaisher_example() -> bool:
    return double_glaisher(parse("10^4,5^2,1^2"), 3, 5) == parse("18^2,9,3,2^2")


def _main_example() -> bool:
    src, img = parse("10^4,5^7,3^5,1^2"), parse("25,18^2,9,5^3,3,2^2")
    return forward(src, 9, 15) == img and inverse(img, 9, 15) == src


def _prime_order_remark() -> bool:
    nine = parse("9")
    three_first = BijectionConfig(prime_order=(3, 2))
    two_first = BijectionConfig(prime_order=(2, 3))
    return (
        forward(nine, 18, 30, three_first) == parse("1^9")
        and forward(nine, 18, 30, two_first) == nine
        and inverse(parse("1^9"), 18, 30, three_first) == nine
    )


def _fifty_chain() -> bool:
    r = classify_orbit(parse("50"), 6, 10)
    return (
        r.outcome == Success(2)
        and r.trajectory == [parse("50"), parse("30,5^4"), parse("18,5^4,3^4")]
        and step_T(parse("50"), 6, 10) == parse("30,5^4")
    )


def _counterexample() -> bool:
    start = parse("108,18^4")
    r = classify_orbit(start, 10, 6)
    return (
        r.outcome == Cycle(3, 0)
        and r.trajectory == [start, parse("30^6"), parse("3^60")]
        and not any(in_target(p, 10, 6) for p in r.trajectory)
    )


CHECKS: list[tuple[str, Callable[[], bool]]] = [
    ("glaisher map (108,18^4) <-> (3^60) in base 6", _glaisher_example),
    ("part-frequency matrices of (20,5^2,4,2^2,1^5) in base 2", _matrix_figure),
    ("single phi images (15),(50),(25)", _small_phis),
    ("double glaisher phi_3 phi_5 of (10^4,5^2,1^2)", _double_glaisher_example),
    ("bijection s=9 t=15 worked example and inverse", _main_example),
    ("prime order changes the image of (9), s=18 t=30", _prime_order_remark),
    ("orbit of (50), s=6 t=10 succeeds after 2 steps", _fifty_chain),
    ("orbit of (108,18^4), s=10 t=6 is a 3-cycle", _counterexample),
]


def run_checks() -> list[tuple[str, bool]]:
    results = []
    for name, check in CHECKS:
        try:
            ok = bool(check())
        except Exception:
            ok = False
        results.append((name, ok))
    return results
