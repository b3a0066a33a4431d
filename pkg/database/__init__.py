"""
Пакет для работы с базой данных
"""

from .database import DatabaseManager

__all__ = ['DatabaseManager']

