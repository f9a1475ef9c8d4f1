from pydantic_settings import BaseSettings, SettingsConfigDict

# Default configurations
DEFAULT_MAX_ORDER = 64
DEFAULT_EXHAUSTIVE_BOUND = 2**24
DEFAULT_BATCH_SIZE = 8192
DEFAULT_RANDOM_COUNT = 1000

class Settings(BaseSettings):
    MAX_RING_ORDER: int = DEFAULT_MAX_ORDER
    MAX_MODULE_ORDER: int = DEFAULT_MAX_ORDER
    EXHAUSTIVE_BOUND: int = DEFAULT_EXHAUSTIVE_BOUND
    SEARCH_BATCH_SIZE: int = DEFAULT_BATCH_SIZE
    SEARCH_WORKERS: int = 1
    MAX_STORED_COUNTEREXAMPLES: int = 1000
    DEFAULT_RANDOM_COUNT: int = DEFAULT_RANDOM_COUNT
    SHOW_PROGRESS: bool = False
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(
        env_file=".env",
        env_prefix="ANN_",
        case_sensitive=True,
        extra="ignore",
    )

settings = Settings()
