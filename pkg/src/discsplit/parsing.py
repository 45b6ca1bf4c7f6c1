"""Raw-text input: an HTTP parser client and a lookup-table stand-in."""

from __future__ import annotations

import json
import re
import urllib.error
import urllib.request
from importlib import resources
from typing import Callable, Iterable

from .tree import ParseTree, PTBError, parse_ptb

__all__ = [
    "TransportError",
    "UpstreamParseError",
    "parse_external",
    "FixtureParser",
    "load_corpus",
    "make_parser",
    "FIXTURE_ENDPOINT",
]

FIXTURE_ENDPOINT = "fixture"


class TransportError(ConnectionError):
    """The parser endpoint could not be reached or answered with an HTTP error."""


class UpstreamParseError(ValueError):
    """The parser endpoint answered with something that is not a bracketed tree."""


def parse_external(text: str, endpoint: str, timeout: float = 10.0) -> ParseTree:
    """POST ``text`` as plain UTF-8 to ``endpoint`` and parse the PTB reply."""
    req = urllib.request.Request(
        endpoint, data=text.encode("utf-8"), method="POST",
        headers={"Content-Type": "text/plain; charset=utf-8"},
    )
    try:
        with urllib.request.urlopen(req, timeout=timeout) as resp:
            body = resp.read().decode("utf-8", errors="replace")
    except urllib.error.HTTPError as exc:
        raise TransportError(f"parser endpoint returned HTTP {exc.code}") from exc
    except (urllib.error.URLError, OSError) as exc:
        raise TransportError(f"cannot reach parser endpoint {endpoint}: {exc}") from exc
    try:
        return parse_ptb(body)
    except PTBError as exc:
        raise UpstreamParseError(f"parser reply is not a bracketed tree: {body[:80]!r}") from exc


def _key(text: str) -> str:
    return re.sub(r"\s+", "", text).lower()


def load_corpus() -> list[dict]:
    """The curated corpus shipped with the package, one record per sentence."""
    raw = resources.files("discsplit").joinpath("data/corpus.jsonl").read_text(encoding="utf-8")
    return [json.loads(line) for line in raw.splitlines() if line.strip()]


class FixtureParser:
    """Sentence-to-tree lookup; keys ignore case and whitespace."""

    def __init__(self, pairs: Iterable[tuple[str, str]]):
        self.table = {}
        for text, ptb in pairs:
            self.table[_key(text)] = ptb

    @classmethod
    def from_corpus(cls) -> "FixtureParser":
        pairs = []
        for rec in load_corpus():
            tree = parse_ptb(rec["ptb"])
            pairs.append((rec["text"], rec["ptb"]))
            pairs.append((" ".join(tree.words), rec["ptb"]))
        return cls(pairs)

    def __call__(self, text: str) -> ParseTree:
        ptb = self.table.get(_key(text))
        if ptb is None:
            raise UpstreamParseError(f"no fixture parse for {text[:60]!r}")
        return parse_ptb(ptb)


def make_parser(endpoint: str | None) -> Callable[[str], ParseTree] | None:
    if not endpoint:
        return None
    if endpoint == FIXTURE_ENDPOINT:
        return FixtureParser.from_corpus()
    return lambda text: parse_external(text, endpoint)
