from decat.cli.config import RunConfig
from decat.cli.main import build_parser, main

__all__ = ["RunConfig", "build_parser", "main"]
