"""
Application settings and configuration management.

This module handles all application settings loaded from environment variables
using Pydantic Settings. It provides type-safe configuration management with
validation and default values.
"""

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """
    Global application settings loaded from environment variables.

    This class defines all configuration options for the Bredon Engine.
    Settings are automatically loaded from environment variables and validated
    using Pydantic. Every value has a default so the engine runs without a .env file.
    """

    # Application settings
    APP_NAME: str = "Bredon Engine"
    APP_VERSION: str = "1.0.0"
    DEBUG: bool = False

    # Computation limits
    GROUP_ORDER_CAP: int = 2000
    CATEGORY_CACHE_SIZE: int = 16

    # Output settings
    SCHEMA_VERSION: str = "bredon-engine/1"
    TEXT_WIDTH: int = 160

    # CORS settings for browser clients of the HTTP API
    ALLOWED_ORIGINS: list[str] = ["http://localhost:3000"]

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="allow",
    )


# Global settings instance
settings = Settings()
