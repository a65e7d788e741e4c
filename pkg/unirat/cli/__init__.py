"""CLI interface for unirat."""

from .cli import cli

__all__ = ["cli"]
