"""Command-line front end."""
from thetalab.cli.commands import COMMANDS, build_parser, dispatch, make_spec, parse_int_list

__all__ = ["COMMANDS", "build_parser", "dispatch", "make_spec", "parse_int_list"]
