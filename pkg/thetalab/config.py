"""Runtime configuration settings."""
from functools import lru_cache

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Settings loaded from environment variables (prefix ``THETALAB_``)."""
    
    app_name: str = "thetalab"
    
    # Graph construction
    cap: int = 5000  # THETALAB_CAP
    alpha_node_budget: int = 2_000_000
    
    # Output
    precision: int = 12  # significant digits of decimal approximations
    default_format: str = "json"
    
    # Caches
    scheme_cache_size: int = 256
    solution_cache_size: int = 4096
    
    # Sweeps and verification suites
    sweep_workers: int = 4
    verify_lp_k_max: int = 5
    singleton_k_max: int = 6
    singleton_n_max: int = 60
    feasible_k_max: int = 4
    feasible_n_max: int = 40
    
    # Logging
    log_level: str = "WARNING"
    log_json: bool = False
    
    model_config = SettingsConfigDict(
        env_prefix="THETALAB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


@lru_cache()
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
