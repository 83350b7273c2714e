"""Configuration settings for the penrose package."""

import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path
from typing import Literal

from pydantic_settings import BaseSettings, SettingsConfigDict


logger = logging.getLogger("penrose")


def setup_logging(log_dir: Path, level: str = "DEBUG") -> logging.Logger:
    """Configure package logging with file rotation."""
    if logger.handlers:
        return logger

    log_dir.mkdir(parents=True, exist_ok=True)
    log_file = log_dir / "penrose.log"

    logger.setLevel(level)

    # File handler with rotation (10MB max, keep 5 backups)
    file_handler = RotatingFileHandler(
        log_file,
        maxBytes=10 * 1024 * 1024,
        backupCount=5,
    )
    file_handler.setLevel(level)
    file_formatter = logging.Formatter(
        "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    )
    file_handler.setFormatter(file_formatter)

    # Console handler for errors only; results go to stdout
    console_handler = logging.StreamHandler()
    console_handler.setLevel(logging.ERROR)
    console_handler.setFormatter(file_formatter)

    logger.addHandler(file_handler)
    logger.addHandler(console_handler)

    return logger


class Settings(BaseSettings):
    """Settings loaded from PENROSE_* environment variables or a .env file."""

    model_config = SettingsConfigDict(
        env_prefix="PENROSE_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    app_name: str = "Penrose"
    debug: bool = False

    # Logging
    log_dir: Path = Path("logs")
    log_level: str = "DEBUG"

    # Output
    default_format: Literal["text", "machine"] = "text"

    # API Settings
    api_host: str = "127.0.0.1"
    api_port: int = 8000


settings = Settings()
