"""
Command-line interface for the antenna design library.

This package contains the design-document loader, the report models and
the subcommand dispatcher used by the root main.py.
"""

from .commands import execute_command
from .design_document import DesignDocument, load_design_document

__all__ = [
    "execute_command",
    "DesignDocument",
    "load_design_document",
]
