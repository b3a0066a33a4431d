"""
Сессия aiohttp для доставки сводок: SSL по certifi, общий таймаут из HDX_HTTP_TIMEOUT.
"""
import os
import ssl
from typing import Optional

import aiohttp
import certifi


def request_timeout(seconds: Optional[float] = None) -> aiohttp.ClientTimeout:
    if seconds is None:
        seconds = float(os.getenv("HDX_HTTP_TIMEOUT", "15"))
    return aiohttp.ClientTimeout(total=seconds)


def create_aiohttp_session(timeout: Optional[float] = None) -> aiohttp.ClientSession:
    context = ssl.create_default_context(cafile=certifi.where())
    return aiohttp.ClientSession(
        connector=aiohttp.TCPConnector(ssl=context),
        timeout=request_timeout(timeout),
    )
