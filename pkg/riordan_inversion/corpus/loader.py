import logging
import os
from pathlib import Path
from typing import Any, NoReturn, Sequence

import yaml
from pydantic import ValidationError

from riordan_inversion.core.errors import ParseError
from riordan_inversion.models.corpus_models import CFSource, Corpus, CorpusCase

logger = logging.getLogger(__name__)

PACKAGE_DIR = Path(__file__).resolve().parent.parent
RESOURCE_DIR = PACKAGE_DIR / "resources"
DEFAULT_CORPUS_FILE = RESOURCE_DIR / "corpus.yml"


def _raise_parse_error(
    path: Path,
    reason: str,
    exc: Exception | None = None,
    line: int | None = None,
    field: str | None = None,
) -> NoReturn:
    error = ParseError(reason, path=path, line=line, field=field)
    logger.error("Corpus error: %s", error)
    if exc is None:
        raise error
    raise error from exc


def resolve_corpus_path(path: str | Path | None = None) -> Path:
    """An explicit path wins, then CORPUS_FILE, then the packaged corpus."""
    if path:
        return Path(path).expanduser().resolve()
    configured_path = os.getenv("CORPUS_FILE")
    if configured_path:
        return Path(configured_path).expanduser().resolve()
    return DEFAULT_CORPUS_FILE


def _line_of(root: yaml.Node | None, location: Sequence[Any]) -> int | None:
    """1-based line of the deepest YAML node reachable along a pydantic error location."""
    node = root
    line = node.start_mark.line + 1 if node is not None else None
    for part in location:
        if isinstance(node, yaml.MappingNode):
            match = next(
                (value for key, value in node.value if getattr(key, "value", None) == part),
                None,
            )
        elif isinstance(node, yaml.SequenceNode) and isinstance(part, int) and part < len(node.value):
            match = node.value[part]
        else:
            match = None
        if match is None:
            break
        node = match
        line = node.start_mark.line + 1
    return line


def load_corpus(path: str | Path | None = None) -> list[CorpusCase]:
    """
    Load and validate a corpus file.

    An empty file is an empty corpus. Every validation problem is reported in one
    ParseError; its ``line`` and ``field`` point at the first one.
    """
    corpus_path = resolve_corpus_path(path)

    try:
        text = corpus_path.read_text(encoding="utf-8")
    except FileNotFoundError as exc:
        _raise_parse_error(corpus_path, "file not found. Set CORPUS_FILE or pass a valid path.", exc)
    except PermissionError as exc:
        _raise_parse_error(corpus_path, "file cannot be read due to permissions.", exc)

    try:
        data = yaml.safe_load(text)
        root = yaml.compose(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        _raise_parse_error(
            corpus_path,
            f"invalid YAML syntax ({exc}).",
            exc,
            line=mark.line + 1 if mark is not None else None,
        )

    if data is None:
        logger.info("Corpus %s is empty", corpus_path)
        return []

    if not isinstance(data, (dict, list)):
        _raise_parse_error(corpus_path, "expected a mapping with 'cases' or a list of cases.")

    try:
        corpus = Corpus.from_dict(data)
    except ValidationError as exc:
        problems = exc.errors()
        offset = [] if isinstance(data, dict) else ["cases"]
        details = "; ".join(
            f"{'.'.join(str(loc) for loc in err.get('loc', [])) or '<root>'}: {err.get('msg', 'invalid value')}"
            for err in problems
        )
        first_loc = list(problems[0].get("loc", [])) if problems else []
        yaml_loc = first_loc[len(offset):] if offset and first_loc[:1] == offset else first_loc
        _raise_parse_error(
            corpus_path,
            f"validation failed ({details}).",
            exc,
            line=_line_of(root, yaml_loc),
            field=".".join(str(loc) for loc in first_loc) or None,
        )

    logger.info("Corpus loaded from %s (%d cases)", corpus_path, len(corpus.cases))
    return corpus.cases


def load_cf_source(path: str | Path) -> CFSource:
    """Load one continued-fraction definition (the ``cf`` block of a corpus case) from YAML."""
    cf_path = Path(path).expanduser().resolve()
    try:
        data = yaml.safe_load(cf_path.read_text(encoding="utf-8"))
    except FileNotFoundError as exc:
        _raise_parse_error(cf_path, "file not found.", exc)
    except yaml.YAMLError as exc:
        _raise_parse_error(cf_path, f"invalid YAML syntax ({exc}).", exc)

    if not isinstance(data, dict):
        _raise_parse_error(cf_path, "expected a mapping with 'builder' or 'levels'.")
    try:
        return CFSource.model_validate(data)
    except ValidationError as exc:
        first = exc.errors()[0]
        _raise_parse_error(
            cf_path,
            f"validation failed ({first.get('msg', 'invalid value')}).",
            exc,
            field=".".join(str(loc) for loc in first.get("loc", [])) or None,
        )
