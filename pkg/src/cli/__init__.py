# src/cli/__init__.py
# Command-line front end

from .config_loader import ResolvedConfig, load_config, resolve_config
from .args import build_parser, parse_args
from .app import main

__all__ = ['ResolvedConfig', 'load_config', 'resolve_config', 'build_parser', 'parse_args', 'main']
