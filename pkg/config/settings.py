# config/settings.py
from pydantic_settings import BaseSettings


class Settings(BaseSettings):
    # App info
    APP_NAME: str = "polybernoulli-bijections"
    APP_VERSION: str = "1.0.0"
    LOG_LEVEL: str = "INFO"

    # Enumeration guards (a truncated oracle is never returned)
    NAIVE_MAX_CELLS: int = 16
    PRUNED_MAX_CELLS: int = 25
    FAMILY_MAX_SIZE: int = 5
    FOREST_MAX_LABELS: int = 7

    # CLI output: "table" or "records"
    OUTPUT_FORMAT: str = "table"

    class Config:
        env_file = ".env"
        env_file_encoding = "utf-8"


# Singleton instance
settings = Settings()


def get_settings() -> Settings:
    return settings
