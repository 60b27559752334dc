"""
Command-line surface of the toolkit
"""

from .main import main, build_parser, exit_code_for

__all__ = ["main", "build_parser", "exit_code_for"]
