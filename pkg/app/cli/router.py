"""
Subcommand registry and argument parsing
"""
from typing import Callable, Dict, List, Optional
import argparse

from pydantic import ValidationError

from app.cli.commands import bounds, construct, hypothesis, index, spectrum, verify
from app.cli.render import CommandResult
from app.core.config import settings
from app.core.exceptions import ConfigError
from app.models import Command, OutputFormat, RunConfig, SearchDirection

CommandHandler = Callable[[RunConfig], CommandResult]

COMMANDS: Dict[Command, CommandHandler] = {
    Command.INDEX: index.run,
    Command.SPECTRUM: spectrum.run,
    Command.CONSTRUCT: construct.run,
    Command.BOUNDS: bounds.run,
    Command.HYPOTHESIS: hypothesis.run,
    Command.VERIFY: verify.run,
}

_HELP = {
    Command.INDEX: "evaluate an index on an edge-list digraph",
    Command.SPECTRUM: "degree spectrum of an edge-list digraph",
    Command.CONSTRUCT: "emit a named extremal family",
    Command.BOUNDS: "list the bound statements applicable at n",
    Command.HYPOTHESIS: "minimal n at which each theorem hypothesis holds",
    Command.VERIFY: "check every applicable bound by exhaustive enumeration",
}


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--input", dest="input_path", help="edge-list file")
    parser.add_argument("--index", dest="index_name", help="index name, e.g. harmonic or randic:-0.25")
    parser.add_argument("--n", type=int, help="number of vertices")
    parser.add_argument("--n-override", type=int, help="vertex count overriding the edge-list header")
    parser.add_argument("--direction", choices=[d.value for d in SearchDirection])
    parser.add_argument("--workers", type=int, help="worker processes (default: available parallelism)")
    parser.add_argument(
        "--format", dest="output_format", default=OutputFormat.TEXT.value,
        choices=[f.value for f in OutputFormat],
    )
    parser.add_argument("--family", help="family name for construct")
    parser.add_argument("--theorem", help="theorem variant: 1i, 1ii, 2i, 2ii, 3i or 3ii")
    parser.add_argument("--n-max", type=int, default=settings.HYPOTHESIS_N_MAX)
    parser.add_argument("--allow-n6", action="store_true", help="permit the n = 6 enumeration")
    parser.add_argument("--theorems", dest="include_theorems", action="store_true",
                        help="also emit theorem-level statements")
    parser.add_argument("--dedup", action="store_true",
                        help="verify: list one canonical attainer per isomorphism class of tight bounds")
    parser.add_argument("--exact", action="store_true", help="exact rational value for integer-valued indices")
    parser.add_argument("--verbose", action="store_true")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vdb", description="VDB topological indices of digraphs")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        _add_common(subparsers.add_parser(command.value, help=_HELP[command]))
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    """Validate parsed arguments into a RunConfig; failures are input errors"""
    fields = {
        key: value for key, value in vars(args).items()
        if key != "verbose" and value is not None
    }
    fields.setdefault("workers", settings.effective_workers)
    try:
        return RunConfig(**fields)
    except ValidationError as e:
        raise ConfigError(
            "; ".join(err["msg"] for err in e.errors()),
            details={"command": fields.get("command")}
        )


def dispatch(config: RunConfig) -> CommandResult:
    return COMMANDS[config.command](config)


def parse(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
