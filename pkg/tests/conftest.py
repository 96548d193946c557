from __future__ import annotations

import itertools

import pytest
from hypothesis import HealthCheck, settings

from skellim.category import FiniteCategory
from skellim.simplicial.nerve import nerve

settings.register_profile(
    "default",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")


def chain(n: int) -> FiniteCategory:
    """The ordinal ``[n]`` as a category with objects ``'0'..'n'``."""
    return FiniteCategory.from_poset([str(k) for k in range(n + 1)], lambda a, b: int(a) <= int(b), name=f"[{n}]")


def divisors(n: int) -> FiniteCategory:
    els = [str(d) for d in range(1, n + 1) if n % d == 0]
    return FiniteCategory.from_poset(els, lambda a, b: int(b) % int(a) == 0, name=f"Div({n})")


def diamond() -> FiniteCategory:
    return FiniteCategory.from_poset(["b", "x", "y", "t"], lambda a, c: a == "b" or c == "t", name="diamond")


def count_monotone(domain, leq_dom, codomain, leq_cod) -> int:
    """Brute-force count of order-preserving maps between finite posets (independent oracle)."""
    total = 0
    for vals in itertools.product(codomain, repeat=len(domain)):
        f = dict(zip(domain, vals))
        if all(leq_cod(f[a], f[b]) for a in domain for b in domain if leq_dom(a, b)):
            total += 1
    return total


@pytest.fixture
def chain2():
    return chain(2)


@pytest.fixture
def nerve_chain2():
    return nerve(chain(2))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
