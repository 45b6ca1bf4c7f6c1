"""Command-line entry point."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .gateway import ENV_PREFIX, ConfigError, EngineConfig, InputFormat, OutputFormat, Pipeline, env_settings
from .parsing import TransportError, UpstreamParseError
from .simplifier import DepthGuardExceeded
from .tree import PTBError, read_tree_lines

__all__ = ["main", "build_parser"]

_TRUE = {"1", "true", "yes", "on"}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="discsplit",
        description="Split complex sentences into a graph of linked minimal propositions.",
        epilog=f"Every option can also be set with an environment variable {ENV_PREFIX}<OPTION>, "
               f"e.g. {ENV_PREFIX}OUT_FORMAT=flat. Command-line flags take precedence.",
    )
    src = p.add_mutually_exclusive_group()
    src.add_argument("--input", help="file with one sentence or bracketed tree per line ('-' for stdin)")
    src.add_argument("--text", help="a single sentence or bracketed tree")
    p.add_argument("--format", choices=[f.value for f in InputFormat], help="input format (default ptb)")
    p.add_argument("--out-format", choices=[f.value for f in OutputFormat], help="output format (default json)")
    p.add_argument("--output", help="write results to this file instead of stdout")
    p.add_argument("--catalog", help="rule catalog file (default: shipped catalog)")
    p.add_argument("--lexicon", help="cue-phrase lexicon file (default: shipped lexicon)")
    p.add_argument("--serve", metavar="HOST:PORT", help="run the HTTP service instead of processing input")
    p.add_argument("--parser-endpoint", help="URL of a constituency parser for raw input, or 'fixture'")
    p.add_argument("--trace", action="store_true", default=None, help="include applied rule names in JSON output")
    return p


def _settings(args: argparse.Namespace, environ) -> dict:
    merged = env_settings(environ)
    if "input" in merged and "text" in merged:
        merged.pop("input")
    for key, value in vars(args).items():
        if value is not None:
            if key in ("input", "text"):
                merged.pop("input", None)
                merged.pop("text", None)
            merged[key] = value
    trace = merged.get("trace", False)
    merged["trace"] = trace if isinstance(trace, bool) else str(trace).lower() in _TRUE
    return merged


def _config(s: dict) -> EngineConfig:
    try:
        fmt = InputFormat(s.get("format", "ptb"))
        out = OutputFormat(s.get("out_format", "json"))
    except ValueError as exc:
        raise ConfigError(str(exc)) from None
    return EngineConfig(
        catalog_path=Path(s["catalog"]) if "catalog" in s else None,
        lexicon_path=Path(s["lexicon"]) if "lexicon" in s else None,
        input_format=fmt,
        output_format=out,
        parser_endpoint=s.get("parser_endpoint"),
        listen_address=s.get("serve"),
        trace=s["trace"],
    )


def _sources(s: dict) -> list[str]:
    if "text" in s:
        return [s["text"]]
    name = s.get("input", "-")
    if name == "-":
        return list(read_tree_lines(sys.stdin))
    with open(name, encoding="utf-8") as fh:
        return list(read_tree_lines(fh))


def _serve(pipeline: Pipeline) -> int:
    import uvicorn

    from .service import create_app

    host, _, port = pipeline.config.listen_address.rpartition(":")
    uvicorn.run(create_app(pipeline=pipeline), host=host or "127.0.0.1", port=int(port))
    return 0


def main(argv=None, environ=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    settings = _settings(args, environ)
    try:
        pipeline = Pipeline(_config(settings))
    except ConfigError as exc:
        print(f"discsplit: error: {exc}", file=sys.stderr)
        return 2
    if pipeline.config.listen_address:
        return _serve(pipeline)
    try:
        sources = _sources(settings)
    except OSError as exc:
        print(f"discsplit: error: {exc}", file=sys.stderr)
        return 2

    blocks, failed = [], False
    out = pipeline.config.output_format
    for n, source in enumerate(sources, 1):
        try:
            blocks.append(pipeline.render(source, name=f"s{n}"))
        except (PTBError, TransportError, UpstreamParseError, DepthGuardExceeded) as exc:
            failed = True
            print(f"discsplit: item {n}: {type(exc).__name__}: {exc}", file=sys.stderr)
    sep = "\n" if out is OutputFormat.JSON else "\n\n"
    text = sep.join(blocks) + "\n" if blocks else ""
    if "output" in settings:
        Path(settings["output"]).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
