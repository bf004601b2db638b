"""Command-line front end: estimate, predict and experiment."""

from app.commands.parser import CommandParser, build_parser

__all__ = ["CommandParser", "build_parser"]
