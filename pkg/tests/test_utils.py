import pytest

from utils import config
from utils.errors import (
    BudgetExceeded,
    DegenerateSpace,
    FillIdentityViolated,
    HypothesisFailed,
    InvalidInput,
    InvariantBreach,
    NotACycle,
    NotPure,
)
from utils.notifier import RunNotifier, get_notifier


@pytest.mark.parametrize("error, code", [
    (InvalidInput("x"), 2),
    (NotACycle(0), 2),
    (BudgetExceeded(10, 5, "scan"), 3),
    (DegenerateSpace("x"), 4),
    (NotPure("x"), 4),
    (FillIdentityViolated(0, (0,), "x"), 5),
    (InvariantBreach("x"), 5),
])
def test_exit_codes(error, code):
    assert error.exit_code == code


def test_error_hierarchy():
    assert isinstance(NotACycle(1), InvalidInput)
    assert isinstance(NotPure("x"), HypothesisFailed)
    e = BudgetExceeded(10, 5, "scan")
    assert (e.needed, e.budget, e.what) == (10, 5, "scan")


@pytest.mark.parametrize("raw, expected", [("", 7), ("12", 12), ("2**5", 32), ("oops", 7)])
def test_int_env(monkeypatch, raw, expected):
    monkeypatch.setenv("HDX_TEST_VALUE", raw)
    assert config._int_env("HDX_TEST_VALUE", 7) == expected


def test_notifier_logs_to_stderr(capsys):
    notifier = get_notifier()
    assert notifier is get_notifier()
    assert not notifier.is_configured()
    assert notifier.report("✅ done") is False
    captured = capsys.readouterr()
    assert captured.err == "✅ done\n"
    assert captured.out == ""


def test_configured_notifier_delivers(monkeypatch, capsys):
    monkeypatch.setenv("TELEGRAM_API", "token")
    monkeypatch.setenv("TELEGRAM_CHAT_ID", "42")
    sent = []

    async def fake_send(self, text):
        sent.append((self.chat_id, text))
        return True

    monkeypatch.setattr(RunNotifier, "send", fake_send)
    notifier = RunNotifier()
    assert notifier.base_url == "https://api.telegram.org/bottoken"
    assert notifier.report("summary")
    assert sent == [("42", "summary")]
    capsys.readouterr()
