"""Configuration and the per-sentence pipeline shared by the CLI and the service."""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Callable

from .lexicon import Lexicon, LexiconError, default_lexicon, load_lexicon
from .rules import CatalogError, inventory, load_catalog
from .serialization import to_dot, to_flat, to_json
from .simplifier import Engine
from .tree import ParseTree, detokenize, parse_ptb
from .parsing import make_parser

__all__ = ["InputFormat", "OutputFormat", "EngineConfig", "ConfigError", "Pipeline", "ENV_PREFIX", "env_settings"]

ENV_PREFIX = "DISCSPLIT_"


class InputFormat(str, enum.Enum):
    PTB = "ptb"
    RAW = "raw"


class OutputFormat(str, enum.Enum):
    JSON = "json"
    FLAT = "flat"
    DOT = "dot"


class ConfigError(ValueError):
    """Invalid or incomplete settings; reported before any input is read."""


@dataclass(frozen=True)
class EngineConfig:
    catalog_path: Path | None = None
    lexicon_path: Path | None = None
    input_format: InputFormat = InputFormat.PTB
    output_format: OutputFormat = OutputFormat.JSON
    parser_endpoint: str | None = None
    listen_address: str | None = None
    trace: bool = False

    def validate(self) -> None:
        for label, path in (("catalog", self.catalog_path), ("lexicon", self.lexicon_path)):
            if path is not None and not Path(path).is_file():
                raise ConfigError(f"{label} file not found: {path}")
        if self.input_format is InputFormat.RAW and not self.parser_endpoint:
            raise ConfigError(
                f"raw input needs a parser endpoint: set --parser-endpoint or {ENV_PREFIX}PARSER_ENDPOINT"
            )
        if self.listen_address is not None:
            host, sep, port = self.listen_address.rpartition(":")
            if not sep or not port.isdigit():
                raise ConfigError(f"listen address must be host:port, got {self.listen_address!r}")


_ENV_KEYS = ("input", "text", "format", "out_format", "output", "catalog", "lexicon", "serve",
             "parser_endpoint", "trace")


def env_settings(environ=None) -> dict[str, str]:
    """Settings taken from ``DISCSPLIT_*`` variables, keyed like the CLI options."""
    environ = os.environ if environ is None else environ
    out = {}
    for key in _ENV_KEYS:
        value = environ.get(ENV_PREFIX + key.upper())
        if value:
            out[key] = value
    return out


class Pipeline:
    """A loaded engine plus the input parser selected by the configuration."""

    def __init__(self, config: EngineConfig, parser: Callable[[str], ParseTree] | None = None):
        config.validate()
        self.config = config
        try:
            rules = load_catalog(Path(config.catalog_path).read_text(encoding="utf-8")) \
                if config.catalog_path else inventory()
            lexicon = Lexicon(load_lexicon(Path(config.lexicon_path).read_text(encoding="utf-8"))) \
                if config.lexicon_path else default_lexicon()
        except (CatalogError, LexiconError) as exc:
            raise ConfigError(str(exc)) from exc
        self.engine = Engine(rules, lexicon)
        self.parser = parser if parser is not None else make_parser(config.parser_endpoint)

    def parse(self, source: str, fmt: InputFormat) -> tuple[ParseTree, str]:
        """Tree and the input text recorded in the output document."""
        if fmt is InputFormat.RAW:
            if self.parser is None:
                raise ConfigError("raw input needs a parser endpoint")
            text = " ".join(source.split())
            return self.parser(text), text
        tree = parse_ptb(source)
        return tree, detokenize(tree.words)

    def document(self, source: str, fmt: InputFormat | None = None) -> str:
        """Canonical JSON document for one input sentence."""
        tree, text = self.parse(source, fmt or self.config.input_format)
        trace: list = []
        graph = self.engine.graph(tree, trace)
        names = [step.rule for step in trace] if self.config.trace else None
        return to_json(graph, text, names)

    def render(self, source: str, fmt: InputFormat | None = None, out: OutputFormat | None = None,
               name: str = "propositions") -> str:
        out = out or self.config.output_format
        if out is OutputFormat.JSON:
            return self.document(source, fmt)
        tree, _ = self.parse(source, fmt or self.config.input_format)
        graph = self.engine.graph(tree)
        return to_flat(graph) if out is OutputFormat.FLAT else to_dot(graph, name)
