from dotenv import load_dotenv
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()

class Settings(BaseSettings):
    # Least squares iteration
    LS_TOLERANCE: float = 1e-10
    LS_MAX_ITER: int = 100_000

    # Ranking extraction
    TIE_TOLERANCE: float = 1e-9

    # Largest Laplacian eigenvalue (power iteration)
    SPECTRAL_TOLERANCE: float = 1e-8
    SPECTRAL_MAX_ITER: int = 10_000
    REGULAR_BIPARTITE_RTOL: float = 1e-6

    # Generalized row sum
    DEFAULT_EPSILON: float = 1.0
    GRS_SAFETY_MARGIN: float = 0.01
    GRS_SERIES_K_MAX: int = 200

    # Positional power
    POSITIONAL_POWER_TOL: float = 1e-10
    POSITIONAL_POWER_MAX_ITER: int = 10_000

    # Direct solvers must reach this relative residual
    SOLVER_RESIDUAL_RTOL: float = 1e-9

    # Output
    SIGNIFICANT_DIGITS: int = 12
    LOG_LEVEL: str = "WARNING"

    model_config = SettingsConfigDict(env_prefix="RANKING_", case_sensitive=True)

settings = Settings()
