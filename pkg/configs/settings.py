from pydantic_settings import BaseSettings
from pydantic import Field
from typing import Literal
from functools import lru_cache


class Settings(BaseSettings):
    """Library and CLI configuration loaded from environment variables."""

    seed: int = Field(
        default=20110101,
        description="RNG seed for the random property suite"
    )
    max_support_dim: int = Field(
        default=12,
        ge=0,
        description="Largest ambient dimension n for which all 2^n supports are enumerated"
    )
    grid_resolution: int = Field(
        default=4,
        ge=1,
        description="Default resolution of oracle parameter grids"
    )
    max_grid_points: int = Field(
        default=1_000_000,
        ge=1,
        description="Upper bound on res^d for a single grid sample"
    )
    property_maps: int = Field(
        default=100,
        ge=1,
        description="Number of random monomial maps in the property suite"
    )
    property_points: int = Field(
        default=1000,
        ge=1,
        description="Sampled points per map for the partition check"
    )
    random_max_dim: int = Field(
        default=4,
        ge=1,
        description="Bound on n and d of random monomial maps"
    )
    random_max_exponent: int = Field(
        default=2,
        ge=1,
        description="Bound on entries of random exponent matrices"
    )
    log_level: Literal["DEBUG", "INFO", "WARNING", "ERROR"] = Field(
        default="WARNING",
        description="Logging level used by the command-line entry points"
    )

    class Config:
        env_prefix = "TORICUBE_"
        env_file = ".env"
        env_file_encoding = "utf-8"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
