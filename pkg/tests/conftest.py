import numpy as np
import pytest

import utils.notifier as notifier_module
from complexes.builders import from_simplices, hypercube, simplex_skeleton


@pytest.fixture(autouse=True)
def quiet_notifier(monkeypatch):
    """Без Telegram: report(...) только пишет в stderr."""
    monkeypatch.delenv("TELEGRAM_API", raising=False)
    monkeypatch.delenv("TELEGRAM_CHAT_ID", raising=False)
    monkeypatch.setattr(notifier_module, "_global_notifier", None)
    yield
    notifier_module._global_notifier = None


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


@pytest.fixture
def circle():
    """∂Δ² - цикл из трёх рёбер."""
    return simplex_skeleton(3, 1)


@pytest.fixture
def tetrahedron():
    """Полный Δ³."""
    return simplex_skeleton(4, 3)


@pytest.fixture
def k4_skeleton():
    """Полный 2-остов Δ³ (K₄ с четырьмя треугольниками)."""
    return simplex_skeleton(4, 2)


@pytest.fixture
def octagon():
    return from_simplices("C8", [(i, (i + 1) % 8) for i in range(8)])


@pytest.fixture
def square():
    return hypercube(2)


@pytest.fixture
def db_path(tmp_path):
    return str(tmp_path / "ledger" / "runs.db")
