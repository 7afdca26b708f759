"""Configuration management for the propagator toolkit."""

import os
from dataclasses import dataclass, field
from typing import Optional
from pathlib import Path
from dotenv import load_dotenv


@dataclass
class ToolkitConfig:
    """Toolkit configuration settings."""

    # Exact combinatorics
    enumeration_bound: int = 12
    exact_count_bound: int = 200_000
    factorial_cache_bound: int = 4096
    enumeration_workers: int = 1

    # Quadrature defaults
    quad_abs_tol: float = 1e-13
    quad_rel_tol: float = 1e-11
    quad_max_subdivisions: int = 200

    # Logging and tracing
    log_dir: Optional[str] = None
    otlp_endpoint: Optional[str] = None
    debug: bool = False


@dataclass
class ValidationResult:
    """Result of configuration validation."""

    is_valid: bool
    error_message: Optional[str] = None
    error_details: list[str] = field(default_factory=list)


class ConfigurationManager:
    """Manages toolkit configuration and environment variables."""

    def __init__(self, env_file: Optional[str] = None):
        """Initialize configuration manager.

        Args:
            env_file: Path to environment file. Defaults to .env in project root.
        """
        self.env_file = env_file or self._find_env_file()
        load_dotenv(self.env_file, override=True)
        self.config = self._load_config()

    def _find_env_file(self) -> str:
        """Find the .env file in the project root."""
        project_root = Path(__file__).parent.parent.parent
        return str(project_root / ".env")

    def _load_config(self) -> ToolkitConfig:
        """Load configuration from environment variables."""
        return ToolkitConfig(
            enumeration_bound=int(os.getenv("PROPAGATOR_ENUMERATION_BOUND", "12")),
            exact_count_bound=int(os.getenv("PROPAGATOR_EXACT_COUNT_BOUND", "200000")),
            factorial_cache_bound=int(os.getenv("PROPAGATOR_FACTORIAL_CACHE_BOUND", "4096")),
            enumeration_workers=int(os.getenv("PROPAGATOR_ENUMERATION_WORKERS", "1")),
            quad_abs_tol=float(os.getenv("PROPAGATOR_QUAD_ABS_TOL", "1e-13")),
            quad_rel_tol=float(os.getenv("PROPAGATOR_QUAD_REL_TOL", "1e-11")),
            quad_max_subdivisions=int(os.getenv("PROPAGATOR_QUAD_MAX_SUBDIVISIONS", "200")),
            log_dir=os.getenv("PROPAGATOR_LOG_DIR") or None,
            otlp_endpoint=os.getenv("PROPAGATOR_OTLP_ENDPOINT") or None,
            debug=os.getenv("PROPAGATOR_DEBUG", "false").lower() == "true",
        )

    def validate_configuration(self) -> ValidationResult:
        """Verify all configuration values are usable.

        Returns:
            ValidationResult listing every invalid setting.
        """
        errors = []

        if self.config.enumeration_bound < 0:
            errors.append("PROPAGATOR_ENUMERATION_BOUND must be nonnegative")

        if self.config.exact_count_bound < 0:
            errors.append("PROPAGATOR_EXACT_COUNT_BOUND must be nonnegative")

        if self.config.factorial_cache_bound < 0:
            errors.append("PROPAGATOR_FACTORIAL_CACHE_BOUND must be nonnegative")

        if self.config.enumeration_workers < 1:
            errors.append("PROPAGATOR_ENUMERATION_WORKERS must be at least 1")

        if self.config.quad_abs_tol <= 0 or self.config.quad_rel_tol <= 0:
            errors.append("Quadrature tolerances must be positive")

        if self.config.quad_max_subdivisions < 1:
            errors.append("PROPAGATOR_QUAD_MAX_SUBDIVISIONS must be at least 1")

        is_valid = len(errors) == 0
        error_message = None if is_valid else f"Configuration validation failed: {len(errors)} errors found"

        return ValidationResult(
            is_valid=is_valid,
            error_message=error_message,
            error_details=errors
        )

    def get_enumeration_bound(self) -> int:
        """Largest n accepted by exhaustive loop enumeration."""
        return self.config.enumeration_bound

    def get_exact_count_bound(self) -> int:
        """Largest n for which densities are built from exact integers."""
        return self.config.exact_count_bound

    def get_factorial_cache_bound(self) -> int:
        """Size of the shared exact factorial table."""
        return self.config.factorial_cache_bound

    def get_enumeration_workers(self) -> int:
        """Worker count for prefix-partitioned enumeration."""
        return self.config.enumeration_workers

    def get_quadrature_settings(self) -> tuple[float, float, int]:
        """Get default quadrature settings.

        Returns:
            Tuple of (abs_tol, rel_tol, max_subdivisions).
        """
        return (
            self.config.quad_abs_tol,
            self.config.quad_rel_tol,
            self.config.quad_max_subdivisions,
        )

    def get_log_dir(self) -> Optional[str]:
        """Directory for the log file, or None to log to stderr only."""
        return self.config.log_dir

    def get_otlp_endpoint(self) -> Optional[str]:
        """OTLP collector endpoint, or None if tracing is off."""
        return self.config.otlp_endpoint

    def is_debug(self) -> bool:
        """Check if debug logging is requested by the environment."""
        return self.config.debug


# Global configuration instance
config_manager = ConfigurationManager()
