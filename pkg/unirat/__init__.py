"""
unirat

Point counting, congruences with modular forms and singularity bookkeeping
used to argue that a double octic Calabi-Yau threefold is not unirational.
"""

__version__ = "1.0.0"
__author__ = "Arithmetic Geometry Team"

from .config import settings
from .models import *  # noqa: F401,F403

from .alphabet import build_fixture, build_models, model_by_name
from .count import count_points, count_range
from .modular import congruence_match, esnault_guess, exact_cy3_fit
from .reporting import ReportManager
from .workflows import PaperWorkflow, WorkflowEngine

__all__ = [
    "settings",
    "build_fixture",
    "build_models",
    "model_by_name",
    "count_points",
    "count_range",
    "congruence_match",
    "esnault_guess",
    "exact_cy3_fit",
    "ReportManager",
    "PaperWorkflow",
    "WorkflowEngine",
]
