# -*- coding: utf-8 -*-
from functools import lru_cache
from os import getenv

from dotenv import load_dotenv
from pydantic import BaseModel, Field, field_validator

from geocomm.maps import DEFAULTS

__all__ = ["Settings", "get_settings"]

load_dotenv()



class Settings(BaseModel):
    """Runtime settings read from ```GEOCOMM_*``` environment variables.

    A ```.env``` file in the working directory is honoured. CLI flags
    default to these values.
    """
    sample_size: int = Field(DEFAULTS["sample_size"], ge=1)
    threads: int = Field(DEFAULTS["threads"], ge=1)
    log_level: str = "INFO"
    resync_every: int = Field(DEFAULTS["resync_every"], ge=0)
    debug: bool = False

    @field_validator("log_level")
    @classmethod
    def _upper(cls, v: str) -> str:
        return v.upper()

    @classmethod
    def from_env(cls) -> "Settings":
        env = {
            "sample_size": getenv("GEOCOMM_SAMPLE_SIZE"),
            "threads": getenv("GEOCOMM_THREADS"),
            "log_level": getenv("GEOCOMM_LOG_LEVEL"),
            "resync_every": getenv("GEOCOMM_RESYNC_EVERY"),
            "debug": getenv("GEOCOMM_DEBUG"),
        }
        return cls(**{k: v for k, v in env.items() if v not in (None, "")})


@lru_cache(maxsize=1)
def get_settings() -> Settings:
    return Settings.from_env()
