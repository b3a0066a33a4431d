"""
Конфигурация одного запуска CLI: флаги argparse с умолчаниями из окружения.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from utils.config import DB_PATH, DEFAULT_BUDGET, DEFAULT_THREADS
from utils.errors import InvalidInput

FORMATS = ("json", "csv", "text")
MODES = ("co", "ho")


@dataclass
class RunConfig:
    subcommand: str
    target: Optional[str] = None
    input: Optional[str] = None
    output: Optional[str] = None
    k: Optional[int] = None
    mode: str = "co"
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    threads: int = DEFAULT_THREADS
    format: str = "json"
    db: Optional[str] = None
    notify: bool = False
    timing: bool = False
    options: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.budget is None:
            self.budget = DEFAULT_BUDGET
        if self.threads is None:
            self.threads = DEFAULT_THREADS
        if self.budget < 1:
            raise InvalidInput(f"budget must be >= 1, got {self.budget}")
        if self.threads < 1:
            raise InvalidInput(f"threads must be >= 1, got {self.threads}")
        if self.format not in FORMATS:
            raise InvalidInput(f"format must be one of {', '.join(FORMATS)}")
        if self.mode not in MODES:
            raise InvalidInput(f"mode must be co or ho, got {self.mode!r}")
        if self.k is not None and self.k < -1:
            raise InvalidInput(f"k must be >= -1, got {self.k}")

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        """Общие флаги берутся из Namespace, остальное складывается в options."""
        common = {"subcommand", "target", "input", "output", "k", "mode", "budget", "seed",
                  "threads", "format", "db", "notify", "timing"}
        values = vars(args)
        kwargs = {name: values[name] for name in common if name in values and values[name] is not None}
        if values.get("db") == "":
            kwargs["db"] = DB_PATH
        options = {name: v for name, v in values.items() if name not in common and name != "handler"}
        return cls(options=options, **kwargs)

    def option(self, name: str, default: Any = None) -> Any:
        value = self.options.get(name)
        return default if value is None else value
