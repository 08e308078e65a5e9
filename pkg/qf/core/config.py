from pydantic import BaseModel
import os
from dotenv import load_dotenv

load_dotenv()

class Settings(BaseModel):
    app_env: str = os.getenv("QF_ENV", "dev")
    max_enum: int = int(os.getenv("QF_MAX_ENUM", "1000000"))
    max_quandle_size: int = int(os.getenv("QF_MAX_QUANDLE", "4096"))
    max_iso_size: int = int(os.getenv("QF_MAX_ISO", "256"))
    threads: int = int(os.getenv("QF_THREADS", str(os.cpu_count() or 1)))
    log_level: str = os.getenv("QF_LOG_LEVEL", "WARNING")

settings = Settings()

def resolve_cap(override: int | None) -> int:
    return settings.max_enum if override is None else override
