"""
Утилита для просмотра журнала прогонов
"""
from typing import Optional

from database import DatabaseManager


def _value(run) -> str:
    value = run['value']
    return "-" if value is None else f"{value.numerator}/{value.denominator}"


def show_latest_runs(db_path: Optional[str] = None, command: Optional[str] = None, limit: int = 20):
    """Показывает последние результаты compute"""
    db = DatabaseManager(db_path) if db_path else DatabaseManager()
    runs = db.get_latest_runs(command, limit)

    if not runs:
        print("Нет данных в журнале")
        return

    print(f"\n🧮 Последние прогоны{' (' + command + ')' if command else ''}:")
    print("-" * 100)
    print(f"{'№':<5} {'Команда':<18} {'Комплекс':<24} {'k':<4} {'Режим':<6} {'Значение':<12} {'Время'}")
    print("-" * 100)

    for run in runs:
        k = "-" if run['k'] is None else run['k']
        print(f"{run['id']:<5} {run['command']:<18} {(run['complex_name'] or '-'):<24} "
              f"{k:<4} {(run['mode'] or '-'):<6} {_value(run):<12} {run['timestamp']}")


def show_run_stats(db_path: Optional[str] = None):
    """Показывает статистику по командам"""
    db = DatabaseManager(db_path) if db_path else DatabaseManager()
    stats = db.get_run_stats()

    if not stats:
        print("Нет данных в журнале")
        return

    print(f"\n📈 Статистика по командам:")
    print("-" * 50)
    print(f"{'Команда':<20} {'Прогонов':<12} {'Комплексов'}")
    print("-" * 50)

    total = 0
    for command, data in stats.items():
        print(f"{command:<20} {data['run_count']:<12} {data['complex_count']}")
        total += data['run_count']

    print("-" * 50)
    print(f"{'Всего':<20} {total:<12}")


def show_suite_history(db_path: Optional[str] = None, suite: Optional[str] = None, limit: int = 50):
    """Показывает последние критерии verify"""
    db = DatabaseManager(db_path) if db_path else DatabaseManager()
    history = db.get_suite_history(suite, limit)

    if not history:
        print("Нет результатов проверок")
        return

    print(f"\n✅ Проверки{' (' + suite + ')' if suite else ''}:")
    print("-" * 80)
    print(f"{'Набор':<16} {'Критерий':<40} {'Итог':<6} {'Время'}")
    print("-" * 80)

    for item in history:
        mark = "✅" if item['passed'] else "❌"
        print(f"{item['suite']:<16} {item['criterion'][:40]:<40} {mark:<6} {item['timestamp']}")
