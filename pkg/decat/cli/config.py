import argparse
from dataclasses import dataclass, field, fields
from typing import List, Optional

from decat.util import default_seed
from decat.util.parallel import default_jobs


@dataclass
class RunConfig:
    """Everything a subcommand needs, collected from the command line.

    ``to_json`` is embedded in every report, so identical configurations give identical
    reports."""

    command: str
    graph: Optional[str] = None
    w: Optional[str] = None
    depth: Optional[int] = None
    checks: Optional[List[str]] = None
    seed: int = field(default_factory=default_seed)
    jobs: int = field(default_factory=default_jobs)
    output: Optional[str] = None
    symbolic: bool = False
    module: Optional[str] = None
    word: Optional[str] = None
    minus: Optional[str] = None
    geometric: bool = False
    N: Optional[int] = None
    k: Optional[int] = None
    height: Optional[int] = None

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "RunConfig":
        config = cls(command=args.command)
        for name in (f.name for f in fields(cls)):
            value = getattr(args, name, None)
            if name != "command" and value is not None:
                setattr(config, name, value)
        return config

    def to_json(self) -> dict:
        "The options that determine the result; the output path and job count do not."
        keys = ("command", "graph", "w", "depth", "checks", "seed", "symbolic", "module")
        keys += ("word", "minus", "geometric", "N", "k", "height")
        values = {key: getattr(self, key) for key in keys}
        return {key: value for key, value in values.items() if value is not None and value is not False}
