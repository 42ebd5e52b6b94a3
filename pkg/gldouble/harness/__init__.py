"""Campaign orchestration and the command-line surface."""
from gldouble.harness.campaign import Campaign, with_resampling
from gldouble.harness.cli import build_parser, execute, exit_code, normalize_vertex, resolve_options

__all__ = [
    "Campaign",
    "build_parser",
    "execute",
    "exit_code",
    "normalize_vertex",
    "resolve_options",
    "with_resampling",
]
