"""Command line interface."""

from .envelope import ResultEnvelope
from .main import build_parser, execute, main

__all__ = ["ResultEnvelope", "build_parser", "execute", "main"]
