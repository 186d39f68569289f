import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Any

from pydantic import BaseModel, Field, field_validator

from config import CORPUS_DIR, CorpusConfig
from linalg.errors import InputError

logger = logging.getLogger(__name__)


@dataclass
class RawInputFile:
    filename: str
    content: dict[str, Any]


class InputRequest(BaseModel):
    path: Path
    max_file_size: int = Field(default=CorpusConfig.MAX_FILE_SIZE.value, ge=1)

    @field_validator("path")
    @classmethod
    def _safe_path(cls, path: Path) -> Path:
        if path.name.startswith("."):
            raise ValueError(f"hidden file {path} is not accepted")
        if _get_extension(path) not in CorpusConfig.ALLOWED_EXTENSIONS.value:
            raise ValueError(f"{path.name}: only .json input files are accepted")
        return path


def resolve_input(name_or_path: str | Path, corpus_dir: Path | None = None) -> Path:
    """
    A path as given if it exists, otherwise the corpus entry of that name.

    Example:
        >>> resolve_input("dualnumbers")   # corpus/dualnumbers.json
        >>> resolve_input("my/algebra.json")
    """
    path = Path(name_or_path)
    if path.is_file():
        return path
    directory = corpus_dir or CORPUS_DIR
    stem = path.name[: -len(".json")] if path.name.endswith(".json") else path.name
    candidate = directory / f"{stem}.json"
    if ".." in path.parts or not candidate.is_file():
        raise InputError(f"no input file or corpus entry named '{name_or_path}'")
    return candidate


def list_corpus(corpus_dir: Path | None = None) -> list[str]:
    directory = corpus_dir or CORPUS_DIR
    return sorted(p.stem for p in directory.glob("*.json") if not p.name.startswith("."))


def read_input_file(name_or_path: str | Path, corpus_dir: Path | None = None) -> RawInputFile:
    """Read and decode one JSON input file with size and type checks."""
    path = resolve_input(name_or_path, corpus_dir)
    try:
        request = InputRequest(path=path)
    except ValueError as e:
        raise InputError(str(e)) from e
    size = request.path.stat().st_size
    if size > request.max_file_size:
        raise InputError(f"{path.name} is {size} bytes (max: {request.max_file_size})")
    try:
        content = json.loads(request.path.read_text(encoding="utf-8"))
    except (json.JSONDecodeError, UnicodeDecodeError) as e:
        raise InputError(f"{path.name} is not valid JSON: {e}") from e
    if not isinstance(content, dict):
        raise InputError(f"{path.name} must hold a JSON object")
    logger.info(f"📥 read {path} ({size} bytes)")
    return RawInputFile(filename=str(path), content=content)


def _get_extension(path: Path) -> str:
    name = path.name.lower()
    if "." in name:
        return name.rsplit(".", maxsplit=1)[-1]
    return ""
