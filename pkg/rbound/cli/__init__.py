"""Command line front end."""
from .config import RunConfig, resolve_seed
from .main import build_parser, main, setup_logging

__all__ = ["RunConfig", "resolve_seed", "build_parser", "main",
           "setup_logging"]
