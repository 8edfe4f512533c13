import logging

from pydantic import ConfigDict
from pydantic_settings import BaseSettings

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class Settings(BaseSettings):
    PROJECT_NAME: str = "Riordan Inversion"
    API_V1_STR: str = "/api/v1"
    LOG_LEVEL: str = "INFO"

    # Truncation orders above this are rejected by the CLI and the HTTP schemas.
    MAX_ORDER: int = 32
    DEFAULT_JOBS: int = 1

    # serve
    HOST: str = "0.0.0.0"
    PORT: int = 8000
    RELOAD: bool = False

    model_config = ConfigDict(case_sensitive=True, env_file=".env", env_file_encoding="utf-8")

    def configure_logging(self, level: str | None = None) -> None:
        """Configure root logging from LOG_LEVEL; ``level`` wins when given."""
        name = (level or self.LOG_LEVEL).upper()
        logging.basicConfig(
            level=getattr(logging, name, logging.INFO),
            format=LOG_FORMAT,
            datefmt="%Y-%m-%d %H:%M:%S",
        )


settings = Settings()
