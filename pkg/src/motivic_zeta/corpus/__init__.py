"""Bundled corpus of snc-models and abelian inputs."""

from pathlib import Path
from typing import List, Optional, Union

from motivic_zeta.config import get_settings
from motivic_zeta.sncmodel.loader import load_model
from motivic_zeta.sncmodel.models import ModelParseError, SncModelData

from .generators import GENERATORS, generate, kodaira_In

BUNDLED_DIR = Path(__file__).parent / "data"


def corpus_dir() -> Path:
    return get_settings().corpus_dir() or BUNDLED_DIR


def list_corpus(kind: str = "model") -> List[Path]:
    """Corpus files of one kind ("model" or "abelian"), sorted by name."""
    paths = sorted(corpus_dir().glob("*.json"))
    abelian = [p for p in paths if p.name.startswith("abelian_")]
    return abelian if kind == "abelian" else [p for p in paths if p not in abelian]


def resolve_input(name: Union[str, Path]) -> Path:
    """
    Resolve a model argument: an existing path, or a corpus file name.

    Raises:
        ModelParseError: If nothing matches
    """
    path = Path(name)
    if path.exists():
        return path
    directory = corpus_dir()
    for candidate in (directory / path.name, directory / f"{path.name}.json"):
        if candidate.exists():
            return candidate
    raise ModelParseError(f"no such model file or corpus entry: {name}")


def load_corpus_model(name: str, n: Optional[int] = None) -> SncModelData:
    return load_model(resolve_input(name), n=n)


__all__ = [
    "BUNDLED_DIR",
    "GENERATORS",
    "corpus_dir",
    "generate",
    "kodaira_In",
    "list_corpus",
    "load_corpus_model",
    "resolve_input",
]
