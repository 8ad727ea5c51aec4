import random

import pytest

from knappstein.rootdata import CartanSpec, build_root_system
from knappstein.torus_char import CharGroup, TorusCharacter


def random_character(rng: random.Random, n: int, group: CharGroup, pool_size: int | None = None) -> TorusCharacter:
    """Values drawn from a small pool with random signs, so equalities and inverse pairs are common."""
    pool_size = pool_size or rng.randint(1, n)
    pool = []
    for _ in range(pool_size):
        free = tuple(rng.randint(-2, 2) for _ in range(group.free_rank))
        tors = tuple(rng.randrange(m) for m in group.torsion_orders)
        pool.append(group.value(free, tors))
    values = []
    for _ in range(n):
        v = rng.choice(pool)
        values.append(v if rng.random() < 0.5 else group.neg(v))
    return TorusCharacter(group, tuple(values))


def char(group: CharGroup, *rows) -> TorusCharacter:
    return TorusCharacter.from_torsion(group, rows)


@pytest.fixture
def c2():
    return build_root_system(CartanSpec("C", 2))


@pytest.fixture
def d3():
    return build_root_system(CartanSpec("D", 3))


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py" in getattr(rep, "nodeid", "") and rep.when == "call":
                label = dict(rep.user_properties).get("criterion", rep.nodeid)
                lines.append((label, "PASS" if outcome == "passed" else "FAIL"))
    if lines:
        terminalreporter.section("acceptance criteria")
        for label, verdict in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {label}")
