"""
Настройки из окружения.

.env загружается до чтения переменных, чтобы HDX_* из файла применялись при импорте.
"""
import os

try:
    from dotenv import load_dotenv  # type: ignore
    load_dotenv()
except Exception:
    pass


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        # допускаем запись вида 2**28
        if "**" in raw:
            base, exp = raw.split("**", 1)
            return int(base) ** int(exp)
        return int(raw)
    except ValueError:
        return default


DEFAULT_BUDGET = _int_env("HDX_BUDGET", 2 ** 28)
DEFAULT_THREADS = _int_env("HDX_THREADS", 1)
DB_PATH = os.getenv("HDX_DB_PATH", "data/hdx_runs.db")

# Размер предвычисленной таблицы оболочки для numpy-пути (2^cap элементов uint64)
SPAN_TABLE_CAP = _int_env("HDX_SPAN_TABLE_CAP", 20)
