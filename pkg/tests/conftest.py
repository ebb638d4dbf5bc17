from __future__ import annotations

from pathlib import Path

import pytest

from storynet.corpus import Corpus, Document, Token
from storynet.names import NameRegistry, NameType
from storynet.project import ProjectFile, save_project

TOY_FILES = {
    "01.txt": "Hagen von Tronege sah den Rin. Hagen rief Sîvrit.\n",
    "02.txt": "Sîvride der helt kam ze Wormez. Dâ was Hagen.\n",
}


def write_toy_corpus(folder: Path) -> Path:
    folder.mkdir(parents=True, exist_ok=True)
    for name, text in TOY_FILES.items():
        (folder / name).write_text(text, encoding="utf-8")
    return folder


def toy_registry() -> NameRegistry:
    registry = NameRegistry()
    registry.add_name("Hagen", NameType.CHARACTER)
    sivrit = registry.add_name("Sîvrit", NameType.CHARACTER)
    registry.add_variant(sivrit, "Sîvride")
    registry.add_name("Tronege", NameType.PLACE)
    return registry


@pytest.fixture
def toy_folder(tmp_path: Path) -> Path:
    return write_toy_corpus(tmp_path / "text")


@pytest.fixture
def toy_project_path(tmp_path: Path, toy_folder: Path) -> Path:
    project = ProjectFile(corpus_path=str(toy_folder), registry=toy_registry())
    path = tmp_path / "project.json"
    save_project(project, path)
    return path


def synthetic_corpus(layout: dict[str, dict[int, str]], length: int = 0) -> Corpus:
    """Build an in-memory corpus placing given words at given positions.

    `layout` maps doc_id -> {position: word}; all other positions up to the
    document length are filled with distinct lowercase filler tokens.
    """
    documents = []
    for ordinal, (doc_id, placed) in enumerate(sorted(layout.items())):
        doc_len = max(length, max(placed, default=-1) + 1)
        tokens = tuple(
            Token(placed.get(pos, f"w{pos}"), pos) for pos in range(doc_len)
        )
        documents.append(Document(doc_id, ordinal, tokens))
    return Corpus(tuple(documents))
