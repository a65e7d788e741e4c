"""
Workflows for unirat: the step engine and the reproduction of the published
tables and congruences.
"""

from .engine import WorkflowEngine, WorkflowExecution, WorkflowStatus, WorkflowStep
from .expectations import ExpectationTable, load_expectations
from .paper import SECTIONS, PaperReport, PaperWorkflow, SectionResult

__all__ = [
    "SECTIONS",
    "ExpectationTable",
    "PaperReport",
    "PaperWorkflow",
    "SectionResult",
    "WorkflowEngine",
    "WorkflowExecution",
    "WorkflowStatus",
    "WorkflowStep",
    "load_expectations",
]
