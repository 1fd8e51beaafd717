"""
Runtime settings, read from SHELLGAP_* environment variables.
CLI flags override these per invocation.
"""
import os
from dataclasses import dataclass, replace
from functools import lru_cache

ENV_PREFIX = "SHELLGAP_"


@dataclass(frozen=True)
class Settings:
    store_dir: str = "results"
    enum_budget: int = 10**8
    brute_force_max_n: int = 9
    batch_size: int = 1 << 15
    probes: int = 4096

    def with_overrides(self, **changes):
        """Copy with every non-None keyword applied."""
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def _env_int(name, default):
    raw = os.environ.get(ENV_PREFIX + name)
    if raw is None or raw.strip() == "":
        return default
    # accepts "1e8" as well as "100000000"
    return int(float(raw)) if "e" in raw.lower() else int(raw)


@lru_cache(maxsize=1)
def get_settings():
    """Settings from the environment, cached for the process."""
    defaults = Settings()
    return Settings(
        store_dir=os.environ.get(ENV_PREFIX + "STORE_DIR", defaults.store_dir),
        enum_budget=_env_int("ENUM_BUDGET", defaults.enum_budget),
        brute_force_max_n=_env_int("BRUTE_FORCE_MAX_N", defaults.brute_force_max_n),
        batch_size=_env_int("BATCH_SIZE", defaults.batch_size),
        probes=_env_int("PROBES", defaults.probes),
    )
