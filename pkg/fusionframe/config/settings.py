from typing import Optional
from pydantic_settings import BaseSettings, SettingsConfigDict
from dotenv import load_dotenv

load_dotenv()

class Settings(BaseSettings):
    model_config = SettingsConfigDict(env_file=".env", env_prefix="FUSIONFRAME_", extra="ignore")

    # 허용 오차 (absolute)
    STRUCTURAL_TOL: float = 1e-8
    SPECTRAL_TOL: float = 1e-8
    CONVERGENCE_TOL: float = 1e-10
    RANK_RTOL: float = 1e-8  # relative to the largest singular value
    TIE_TOL: float = 1e-8

    # 경사 하강 설정
    STEP_SIZE: float = 1e-2
    MAX_ITERS: int = 100_000
    MAX_HALVINGS: int = 30
    MONOTONE_SLACK: float = 1e-12
    RECORD_EVERY: int = 1

    # 무작위 생성
    MAX_REDRAWS: int = 10

    # property S 후보 부분공간
    SUBSET_SIZE_CAP: int = 12
    RANDOM_SUBSPACES: int = 4
    PROPERTY_S_SEED: int = 0

    MAJORIZATION_TOL: float = 1e-9

    # 배치 병렬성 (None -> physical core count)
    THREADS: Optional[int] = None

    # 로깅 설정
    LOG_LEVEL: str = "INFO"
    LOG_FILE_PATH: Optional[str] = None
    LOG_MAX_SIZE: int = 10 * 1024 * 1024  # 10MB
    LOG_BACKUP_COUNT: int = 5

settings = Settings()
