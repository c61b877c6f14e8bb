from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from dotenv import load_dotenv

# Project root: /.../frobenius-lab
PROJECT_ROOT = Path(__file__).resolve().parents[1]

# Default data folders
DATA_DIR = PROJECT_ROOT / "data"
SESSIONS_DIR = DATA_DIR / "sessions"
REPORTS_DIR = PROJECT_ROOT / "assets" / "reports"

# Exponent guard shared by every polynomial operation
EXPONENT_CAP = 2**20

# CLI defaults
DEFAULT_MAX_E = 16
DEFAULT_LEVEL = 6
DEFAULT_K_MAX = 8

load_dotenv(override=False)


@dataclass(frozen=True)
class LabSettings:
    """
    Settings read from the environment (or a local .env file).

    Nothing here changes a mathematical result: only where diagnostics
    go and how loud they are.
    """

    log_level: str = "WARNING"
    reports_dir: Path = REPORTS_DIR

    @classmethod
    def from_env(cls) -> "LabSettings":
        return cls(
            log_level=os.getenv("FROBENIUS_LAB_LOG_LEVEL", "WARNING").upper(),
            reports_dir=Path(os.getenv("FROBENIUS_LAB_REPORTS_DIR", str(REPORTS_DIR))),
        )


SETTINGS = LabSettings.from_env()
