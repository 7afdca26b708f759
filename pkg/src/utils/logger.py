"""Structured logging setup with OpenTelemetry tracing."""

import logging
import sys
from contextlib import nullcontext
from typing import Optional
from pathlib import Path
from opentelemetry import trace
from opentelemetry.sdk.resources import Resource
from opentelemetry.sdk.trace import TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor
from utils.config import config_manager


class ToolkitLogger:
    """Centralized logging configuration for the propagator toolkit."""

    def __init__(self):
        """Initialize the logging system."""
        self._configured = False
        self._tracer = None

    def setup_logging(self, debug: bool = False) -> None:
        """Configure structured logging for the toolkit.

        Console output goes to stderr; stdout carries CSV/JSON data.

        Args:
            debug: Whether to enable debug level logging.
        """
        if self._configured:
            return

        log_level = logging.DEBUG if debug else logging.INFO

        handlers: list[logging.Handler] = [logging.StreamHandler(sys.stderr)]

        log_dir = config_manager.get_log_dir()
        if log_dir:
            Path(log_dir).mkdir(parents=True, exist_ok=True)
            handlers.append(
                logging.FileHandler(Path(log_dir) / "propagator_toolkit.log", encoding='utf-8')
            )

        logging.basicConfig(
            level=log_level,
            format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
            datefmt='%Y-%m-%d %H:%M:%S',
            handlers=handlers
        )

        # Suppress verbose libraries
        logging.getLogger('opentelemetry').setLevel(logging.WARNING)
        logging.getLogger('grpc').setLevel(logging.WARNING)
        logging.getLogger('matplotlib').setLevel(logging.WARNING)

        self._configured = True

        logger = logging.getLogger(__name__)
        logger.debug(f"Logging configured - Level: {logging.getLevelName(log_level)}")

    def setup_tracing(self) -> None:
        """Configure OTLP span export when a collector endpoint is set."""
        endpoint = config_manager.get_otlp_endpoint()
        if not endpoint:
            logging.getLogger(__name__).debug("Tracing disabled: no OTLP endpoint configured")
            return

        try:
            from opentelemetry.exporter.otlp.proto.grpc.trace_exporter import OTLPSpanExporter

            provider = TracerProvider(resource=Resource.create({"service.name": "propagator-toolkit"}))
            provider.add_span_processor(BatchSpanProcessor(OTLPSpanExporter(endpoint=endpoint)))
            trace.set_tracer_provider(provider)
            self._tracer = trace.get_tracer(__name__)

            logging.getLogger(__name__).info(f"OTLP tracing configured ({endpoint})")

        except Exception as e:
            logging.getLogger(__name__).warning(f"Failed to configure tracing: {e}")

    def get_tracer(self) -> Optional[trace.Tracer]:
        """Get the tracer for creating custom spans.

        Returns:
            OpenTelemetry tracer instance, or None if tracing not configured.
        """
        return self._tracer


# Global logger instance
toolkit_logger = ToolkitLogger()


def setup_logging(debug: bool = False) -> None:
    """Setup toolkit logging and tracing.

    Args:
        debug: Whether to enable debug level logging.
    """
    toolkit_logger.setup_logging(debug or config_manager.is_debug())
    toolkit_logger.setup_tracing()


def get_tracer() -> Optional[trace.Tracer]:
    """Get the tracer for creating custom spans."""
    return toolkit_logger.get_tracer()


def create_span(name: str, **attributes):
    """Create a custom tracing span.

    Args:
        name: Name of the span.
        **attributes: Additional span attributes.

    Returns:
        Span context manager, or a no-op context if tracing not available.
    """
    tracer = get_tracer()
    if tracer:
        return tracer.start_as_current_span(name, attributes=attributes)
    return nullcontext()


def log_stage(component: str, stage: str, status: str, duration: float = None) -> None:
    """Log a computation stage with structured data.

    Args:
        component: Module doing the work (combinat, lattice, continuum, pdx, cli).
        stage: Description of the stage.
        status: started, completed or failed.
        duration: Duration in seconds if the stage is completed.
    """
    logger = logging.getLogger(f"toolkit.{component}")

    extra = {
        'component': component,
        'stage': stage,
        'status': status
    }

    if duration is not None:
        extra['duration'] = duration

    if status == "failed":
        logger.error(f"Stage failed: {stage}", extra=extra)
    elif status == "completed":
        duration_str = f" ({duration:.2f}s)" if duration else ""
        logger.info(f"Stage completed: {stage}{duration_str}", extra=extra)
    else:
        logger.info(f"Stage {status}: {stage}", extra=extra)


def log_sweep_progress(current_step: int, total_steps: int, description: str) -> None:
    """Log sweep progress with structured data.

    Args:
        current_step: Current step number (1-based).
        total_steps: Total number of steps.
        description: Description of current step.
    """
    logger = logging.getLogger("toolkit.sweep")

    progress = (current_step / total_steps) * 100 if total_steps else 100.0

    logger.debug(
        f"Sweep progress: {current_step}/{total_steps} ({progress:.1f}%) - {description}",
        extra={
            'current_step': current_step,
            'total_steps': total_steps,
            'progress_percent': progress,
            'description': description
        }
    )
