from pydantic_settings import BaseSettings
from functools import lru_cache
from pathlib import Path
from typing import Optional


class Settings(BaseSettings):
    # Application
    APP_NAME: str = "CubicFields"
    APP_ENV: str = "development"
    DEBUG: bool = False
    LOG_LEVEL: str = "WARNING"

    # Server
    HOST: str = "127.0.0.1"
    PORT: int = 8000

    # Precision
    DEFAULT_DIGITS: int = 50
    GUARD_DIGITS: int = 20
    MIN_DIGITS: int = 10
    ROUNDING_MARGIN: int = 10  # digits given up when rounding trig sums to integers

    # OEIS
    OEIS_BASE_URL: str = "https://oeis.org"
    OEIS_TIMEOUT: float = 10.0
    OEIS_OFFLINE: bool = False
    CUBICFIELDS_OEIS_CACHE: Optional[str] = None

    class Config:
        env_file = ".env"
        case_sensitive = True
        extra = "ignore"  # Ignore extra fields in .env

    @property
    def oeis_cache_dir(self) -> Path:
        if self.CUBICFIELDS_OEIS_CACHE:
            return Path(self.CUBICFIELDS_OEIS_CACHE).expanduser()
        return Path.home() / ".cache" / "cubicfields" / "oeis"


@lru_cache()
def get_settings() -> Settings:
    return Settings()


settings = get_settings()
