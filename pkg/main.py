"""
Точка входа: python main.py build|compute|verify|runs ...
"""
import sys

# Загрузка переменных окружения из .env (если есть) ДО импортов пакетов,
# чтобы HDX_BUDGET, HDX_THREADS и HDX_DB_PATH применялись при импорте utils.config
try:
    from dotenv import load_dotenv  # type: ignore
    load_dotenv()
except Exception:
    pass

from cli import main


if __name__ == "__main__":
    sys.exit(main())
