"""
Configuration for the torsion-class workbench
"""

import os
from dataclasses import dataclass, replace
from typing import Any

from dotenv import load_dotenv

from .errors import ConfigError

# Load .env (default) or a custom file via ENV_FILE
load_dotenv(dotenv_path=os.getenv("ENV_FILE", ".env"), override=False)

SUPPORTED_FIELDS = (2, 3, 5)
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


@dataclass(frozen=True)
class WorkbenchConfig:
    """Caps, oracle field and sampling settings shared by every module"""

    # Enumeration caps
    max_indecs: int = 22  # brute-force subset sweep, about 4M subsets
    max_bricks: int = 22
    max_ext_classes: int = 256
    iso_max: int = 20

    # Oracle settings
    field: int = 2
    wide_bound: int = 2

    # Sampling / parallelism
    seed: int = 0
    cjr_samples: int = 1000
    jobs: int = 1

    # Kupisch sanity bound for cyclic algebras: c_i <= cyclic_bound * n + 1
    cyclic_bound: int = 2

    catalog_dir: str = "instances"
    log_level: str = "WARNING"

    @classmethod
    def from_env(cls) -> 'WorkbenchConfig':
        """Create config from environment variables"""
        try:
            config = cls(
                max_indecs=int(os.getenv('TORSLAB_MAX_INDECS', '22')),
                max_bricks=int(os.getenv('TORSLAB_MAX_BRICKS', '22')),
                max_ext_classes=int(os.getenv('TORSLAB_MAX_EXT_CLASSES', '256')),
                iso_max=int(os.getenv('TORSLAB_ISO_MAX', '20')),
                field=int(os.getenv('TORSLAB_FIELD', '2')),
                wide_bound=int(os.getenv('TORSLAB_WIDE_BOUND', '2')),
                seed=int(os.getenv('TORSLAB_SEED', '0')),
                cjr_samples=int(os.getenv('TORSLAB_CJR_SAMPLES', '1000')),
                jobs=int(os.getenv('TORSLAB_JOBS', '1')),
                cyclic_bound=int(os.getenv('TORSLAB_CYCLIC_BOUND', '2')),
                catalog_dir=os.getenv('TORSLAB_CATALOG', 'instances'),
                log_level=os.getenv('TORSLAB_LOG_LEVEL', 'WARNING').upper(),
            )
        except ValueError as e:
            raise ConfigError(f"Invalid TORSLAB_* environment value: {e}") from e
        return config.validate()

    def with_overrides(self, **overrides: Any) -> 'WorkbenchConfig':
        """Return a copy with the non-None overrides applied (CLI flags win over env)"""
        given = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **given).validate()

    def validate(self) -> 'WorkbenchConfig':
        if self.field not in SUPPORTED_FIELDS:
            raise ConfigError(f"Field characteristic must be one of {SUPPORTED_FIELDS}, got {self.field}")
        if self.log_level not in LOG_LEVELS:
            raise ConfigError(f"Log level must be one of {LOG_LEVELS}, got {self.log_level!r}")
        for name in ('max_indecs', 'max_bricks', 'max_ext_classes', 'iso_max',
                     'wide_bound', 'cjr_samples', 'jobs', 'cyclic_bound'):
            if getattr(self, name) <= 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)}")
        return self


_config: WorkbenchConfig | None = None


def get_config() -> WorkbenchConfig:
    """Get the process-wide configuration"""
    global _config
    if _config is None:
        _config = WorkbenchConfig.from_env()
    return _config


def set_config(config: WorkbenchConfig) -> None:
    global _config
    _config = config
