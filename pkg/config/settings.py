from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Seeding (PROBVAR_SEED)
    SEED: int = 0

    # Logging
    LOG_LEVEL: str = "INFO"

    # Numerical tolerances
    NORMALIZATION_TOLERANCE: float = 1e-9
    SLACK_TOLERANCE: float = 1e-12
    MEASURABILITY_TOLERANCE: float = 1e-12
    PROPERTY_TOLERANCE: float = 1e-12

    # Largest partition size whose sigma-algebra is enumerated (2^N members)
    ENUMERATION_LIMIT: int = 20

    # Solver defaults
    SOLVER_TOL: float = 1e-10
    SOLVER_MAX_ITERS: int = 1_000_000
    ILL_CONDITIONING_RATIO: float = 1e6

    # Property suites
    SUITE_WORKERS: int = 1

    model_config = SettingsConfigDict(
        env_file=".env", env_prefix="PROBVAR_", extra="ignore"
    )
