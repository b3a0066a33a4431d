"""
Журнал прогонов в SQLite: результаты compute и отчёты verify
"""
import os
import sqlite3
from fractions import Fraction
from typing import List, Dict, Any, Optional

from utils.config import DB_PATH


class DatabaseManager:
    def __init__(self, db_path: str = DB_PATH):
        self.db_path = db_path
        self.init_database()

    def init_database(self):
        """Инициализация базы данных и создание таблиц"""
        folder = os.path.dirname(self.db_path)
        if folder:
            os.makedirs(folder, exist_ok=True)
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()

            # Результаты compute: значение хранится точной дробью
            cursor.execute('''
                CREATE TABLE IF NOT EXISTS runs (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    command TEXT NOT NULL,
                    complex_name TEXT,
                    complex_hash TEXT,
                    k INTEGER,
                    mode TEXT,
                    value_num INTEGER,
                    value_den INTEGER,
                    witness_hex TEXT,
                    budget_used INTEGER,
                    seed INTEGER,
                    payload TEXT NOT NULL DEFAULT '{}',
                    timestamp DATETIME DEFAULT CURRENT_TIMESTAMP
                )
            ''')

            # Критерии verify
            cursor.execute('''
                CREATE TABLE IF NOT EXISTS suite_results (
                    id INTEGER PRIMARY KEY AUTOINCREMENT,
                    suite TEXT NOT NULL,
                    criterion TEXT NOT NULL,
                    passed INTEGER NOT NULL,
                    detail TEXT,
                    timestamp DATETIME DEFAULT CURRENT_TIMESTAMP
                )
            ''')

            cursor.execute('CREATE INDEX IF NOT EXISTS idx_runs_hash_command ON runs(complex_hash, command)')
            cursor.execute('CREATE INDEX IF NOT EXISTS idx_runs_timestamp ON runs(timestamp)')
            cursor.execute('CREATE INDEX IF NOT EXISTS idx_suite_results_suite ON suite_results(suite)')
            conn.commit()

    def save_run(self, command: str, complex_name: Optional[str] = None, complex_hash: Optional[str] = None,
                 k: Optional[int] = None, mode: Optional[str] = None, value: Optional[Fraction] = None,
                 witness_hex: Optional[str] = None, budget_used: Optional[int] = None,
                 seed: Optional[int] = None, payload: str = "{}") -> int:
        """
        Сохраняет один результат compute. Возвращает id записи
        """
        num = den = None
        if value is not None:
            value = Fraction(value)
            num, den = value.numerator, value.denominator
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            cursor.execute('''
                INSERT INTO runs (command, complex_name, complex_hash, k, mode, value_num, value_den,
                                  witness_hex, budget_used, seed, payload)
                VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
            ''', (command, complex_name, complex_hash, k, mode, num, den,
                  witness_hex, budget_used, seed, payload))
            conn.commit()
            return int(cursor.lastrowid)

    def get_latest_runs(self, command: Optional[str] = None, limit: int = 20) -> List[Dict[str, Any]]:
        """
        Последние записи runs, новые первыми
        """
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()

            query = '''
                SELECT id, command, complex_name, complex_hash, k, mode, value_num, value_den,
                       witness_hex, budget_used, seed, payload, timestamp
                FROM runs
            '''
            params: List[Any] = []
            if command:
                query += ' WHERE command = ?'
                params.append(command)
            query += ' ORDER BY id DESC LIMIT ?'
            params.append(limit)
            cursor.execute(query, params)

            runs = []
            for row in cursor.fetchall():
                value = Fraction(row[6], row[7]) if row[6] is not None and row[7] else None
                runs.append({
                    'id': row[0],
                    'command': row[1],
                    'complex_name': row[2],
                    'complex_hash': row[3],
                    'k': row[4],
                    'mode': row[5],
                    'value': value,
                    'witness_hex': row[8],
                    'budget_used': row[9],
                    'seed': row[10],
                    'payload': row[11],
                    'timestamp': row[12],
                })
            return runs

    def get_run_stats(self) -> Dict[str, Any]:
        """
        Число запусков и различных комплексов по командам
        """
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()

            cursor.execute('''
                SELECT command, COUNT(*) as run_count, COUNT(DISTINCT complex_hash) as complex_count
                FROM runs
                GROUP BY command
                ORDER BY command
            ''')

            stats = {}
            for row in cursor.fetchall():
                stats[row[0]] = {
                    'run_count': row[1],
                    'complex_count': row[2],
                }
            return stats

    def save_suite_results(self, suite: str, results: List[Dict[str, Any]]) -> int:
        """
        Сохраняет критерии одного прогона verify. Возвращает число строк
        """
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            saved = 0
            for item in results:
                cursor.execute('''
                    INSERT INTO suite_results (suite, criterion, passed, detail)
                    VALUES (?, ?, ?, ?)
                ''', (item.get('suite', suite), item['criterion'], int(bool(item['passed'])),
                      str(item.get('detail', ''))))
                saved += 1
            conn.commit()
            return saved

    def get_suite_history(self, suite: Optional[str] = None, limit: int = 50) -> List[Dict[str, Any]]:
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()

            query = 'SELECT suite, criterion, passed, detail, timestamp FROM suite_results'
            params: List[Any] = []
            if suite:
                query += ' WHERE suite = ?'
                params.append(suite)
            query += ' ORDER BY id DESC LIMIT ?'
            params.append(limit)
            cursor.execute(query, params)

            return [
                {
                    'suite': row[0],
                    'criterion': row[1],
                    'passed': bool(row[2]),
                    'detail': row[3],
                    'timestamp': row[4],
                }
                for row in cursor.fetchall()
            ]

    def clear_old_data(self, days: int = 30) -> int:
        """
        Удаляет записи старше days дней. Возвращает число удалённых строк
        """
        with sqlite3.connect(self.db_path) as conn:
            cursor = conn.cursor()
            cutoff = f'-{int(days)} days'

            cursor.execute("DELETE FROM runs WHERE timestamp < datetime('now', ?)", (cutoff,))
            removed = cursor.rowcount
            cursor.execute("DELETE FROM suite_results WHERE timestamp < datetime('now', ?)", (cutoff,))
            removed += cursor.rowcount

            conn.commit()
            return removed
