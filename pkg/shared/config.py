from __future__ import annotations
import os
from dataclasses import dataclass
from dotenv import load_dotenv

from shared.util import env_int

load_dotenv()

_ROOT = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))


@dataclass
class Config:
    fuel: int = env_int("QUQE_FUEL", 100000)
    max_depth: int = env_int("QUQE_MAX_DEPTH", 10000)
    mode: str = os.getenv("QUQE_MODE", "ef")
    log_level: str = os.getenv("QUQE_LOG_LEVEL", "WARNING")
    stdlib_path: str = os.getenv("QUQE_STDLIB", os.path.join(_ROOT, "stdlib.quqe"))


CFG = Config()
