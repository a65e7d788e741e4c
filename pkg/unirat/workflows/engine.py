"""
Step engine shared by unirat workflows.

A workflow is an ordered list of steps; the engine runs them, records each
step's result and stops at the first step that raises.
"""

import time
from dataclasses import dataclass, field
from datetime import datetime
from enum import Enum
from typing import Any, Callable, Dict, List, Optional

from ..utils import get_logger, log_performance

logger = get_logger(__name__)


class WorkflowStatus(Enum):
    """Status of a workflow execution."""

    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


@dataclass
class WorkflowStep:
    """Individual step in a workflow."""

    name: str
    function: Callable[..., Any]
    args: tuple = ()
    kwargs: Dict[str, Any] = field(default_factory=dict)


@dataclass
class WorkflowExecution:
    """Execution context for a workflow."""

    workflow_id: str
    name: str
    status: WorkflowStatus = WorkflowStatus.PENDING
    started_at: Optional[datetime] = None
    completed_at: Optional[datetime] = None
    current_step: int = 0
    total_steps: int = 0
    errors: List[str] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    failure: Optional[BaseException] = None


class WorkflowEngine:
    """Runs steps in order and keeps the executions it has seen."""

    def __init__(self):
        self.executions: Dict[str, WorkflowExecution] = {}

    def execute_workflow(
        self, workflow_id: str, name: str, steps: List[WorkflowStep]
    ) -> WorkflowExecution:
        """
        Execute a workflow with the given steps.

        Args:
            workflow_id: Unique identifier for the workflow
            name: Human-readable name for the workflow
            steps: Steps to execute, in order

        Returns:
            WorkflowExecution with per-step results, or the failure that stopped it
        """
        execution = WorkflowExecution(
            workflow_id=workflow_id,
            name=name,
            total_steps=len(steps),
            started_at=datetime.now(),
            status=WorkflowStatus.RUNNING,
        )
        self.executions[workflow_id] = execution
        logger.info(f"Starting workflow: {name} ({workflow_id})")

        for i, step in enumerate(steps):
            execution.current_step = i + 1
            logger.info(f"Executing step {i + 1}/{len(steps)}: {step.name}")
            start = time.time()
            try:
                execution.results[step.name] = step.function(*step.args, **step.kwargs)
            except Exception as e:
                error_msg = f"Step '{step.name}' failed: {e}"
                logger.error(error_msg)
                execution.errors.append(error_msg)
                execution.failure = e
                execution.status = WorkflowStatus.FAILED
                execution.completed_at = datetime.now()
                return execution
            log_performance(f"step {step.name}", time.time() - start)

        execution.status = WorkflowStatus.COMPLETED
        execution.completed_at = datetime.now()
        logger.info(f"Workflow completed: {name}")
        return execution

    def get_workflow_status(self, workflow_id: str) -> Optional[WorkflowExecution]:
        return self.executions.get(workflow_id)

