import random
from fractions import Fraction

import pytest

from bolalg.algebra import BolAlgebra
from bolalg.catalog import bol_catalog, lie_catalog


def perturb(B: BolAlgebra, which: str, idx: tuple, delta=Fraction(1)) -> BolAlgebra:
    """Copy of ``B`` with one structure constant shifted by ``delta`` (0-based ``idx``)."""
    binary = [[list(v) for v in row] for row in B.binary]
    ternary = [[[list(v) for v in row] for row in plane] for plane in B.ternary]
    if which == "bin":
        i, j, k = idx
        binary[i][j][k] += delta
    else:
        i, j, k, l = idx
        ternary[i][j][k][l] += delta
    return BolAlgebra(B.dim, binary, ternary)


def perturbations(count: int = 20, seed: int = 2024):
    """Deterministic list of (label, algebra) single-entry perturbations of catalog algebras."""
    rng = random.Random(seed)
    cat = bol_catalog()
    names = sorted(cat)
    out = []
    while len(out) < count:
        name = rng.choice(names)
        B = cat[name]
        n = B.dim
        which = rng.choice(["bin", "ter"])
        idx = tuple(rng.randrange(n) for _ in range(3 if which == "bin" else 4))
        delta = Fraction(rng.choice([-2, -1, 1, 3]), rng.choice([1, 2]))
        out.append((f"{name}:{which}{tuple(i + 1 for i in idx)}{delta}", perturb(B, which, idx, delta)))
    return out


@pytest.fixture(scope="session")
def catalog():
    return bol_catalog()


@pytest.fixture(scope="session")
def lies():
    return lie_catalog()


# -- acceptance summary: one line per criterion ---------------------------------------------

_CRITERIA: dict[int, list[tuple[str, str]]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


def pytest_runtest_makereport(item, call):
    marker = item.get_closest_marker("criterion")
    if marker is None or call.when != "call":
        return
    outcome = "pass" if call.excinfo is None else "fail"
    _CRITERIA.setdefault(marker.args[0], []).append((item.name, outcome))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_CRITERIA):
        parts = _CRITERIA[n]
        ok = sum(1 for _, o in parts if o == "pass")
        verdict = "PASS" if ok == len(parts) else "FAIL"
        failed = ", ".join(name for name, o in parts if o != "pass")
        line = f"criterion {n:2d}: {verdict}  ({ok}/{len(parts)} parts)"
        terminalreporter.write_line(line + (f"  failing: {failed}" if failed else ""))
