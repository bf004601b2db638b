"""Configuration settings for the application"""

from pydantic_settings import BaseSettings, SettingsConfigDict

from app.core.enums import AppEnvs, LogLevel


class AppConfig(BaseSettings):
    """Primary configuration settings for the application."""

    model_config = SettingsConfigDict(
        env_file=".env", env_file_encoding="utf-8", extra="ignore"
    )

    LOG_LEVEL: LogLevel = LogLevel.INFO
    RELEASE_VERSION: str = "0.1.0"
    ENVIRONMENT: AppEnvs = AppEnvs.DEVELOPMENT

    # Sample evaluation
    WORKER_COUNT: int | None = None
    SAMPLE_BLOCK_ELEMENTS: int = 2**20

    # Experiments
    DEFAULT_SEED: int = 0
    DEFAULT_REPEATS: int = 10
    DEFAULT_GRID: list[int] = [10, 50, 100, 250, 500, 750, 1000]
    MSC10480_GRID: list[int] = [100, 1000, 5000, 10000, 50000, 100000]
    MSC10480_PATH: str = ""
    OUTPUT_DIR: str = "results"

    # Zeroth-order oracle
    ZEROTH_ORDER_ALPHA_SCALE: float = 1e-4


# Initialize configuration settings
settings = AppConfig()
