"""
Журнал прогонов: строки в stderr и, по желанию, сводки в Telegram.

stdout занят выводом команд, поэтому log(...) пишет в stderr.
report(...) дополнительно отправляет текст в чат, если заданы TELEGRAM_API и TELEGRAM_CHAT_ID.
"""
import asyncio
import os
import sys
from typing import Optional

from .http_client import create_aiohttp_session


class RunNotifier:
    def __init__(self, chat_id: Optional[str] = None) -> None:
        token = os.getenv("TELEGRAM_API", "").strip()
        cid = (chat_id or os.getenv("TELEGRAM_CHAT_ID", "")).strip()
        self.token = token
        self.chat_id = cid or None
        self.base_url = f"https://api.telegram.org/bot{self.token}" if self.token else None

    def is_configured(self) -> bool:
        return bool(self.base_url and self.chat_id)

    async def send(self, text: str) -> bool:
        """Асинхронно отправляет сообщение. Возвращает True при успехе."""
        if not self.is_configured():
            return False
        url = f"{self.base_url}/sendMessage"
        payload = {"chat_id": self.chat_id, "text": text}
        try:
            async with create_aiohttp_session() as session:
                async with session.post(url, json=payload) as resp:
                    return resp.status == 200
        except Exception:
            return False

    def log(self, text: str) -> None:
        print(text, file=sys.stderr)

    def report(self, text: str) -> bool:
        """log(...) и доставка в Telegram; ошибки доставки проглатываются."""
        self.log(text)
        if not self.is_configured():
            return False
        try:
            return asyncio.run(self.send(text))
        except Exception:
            return False


_global_notifier: Optional[RunNotifier] = None


def get_notifier(chat_id: Optional[str] = None) -> RunNotifier:
    global _global_notifier
    if _global_notifier is None or (chat_id and _global_notifier.chat_id != chat_id):
        _global_notifier = RunNotifier(chat_id)
    return _global_notifier
