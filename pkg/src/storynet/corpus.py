"""Load a folder of plain-text files into an ordered, tokenized corpus.

Documents keep their own 0-based token positions; word distances are always
measured inside one document, never across file boundaries.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

__all__ = ["Token", "Document", "Corpus", "CorpusError", "tokenize", "load_corpus"]

# Characters that may join letters inside a word. Dashes other than the
# plain hyphen (em/en dash etc.) separate words.
_JOINERS = frozenset("'’-‐")

DEFAULT_GLOB = "*.txt"
DEFAULT_ENCODING = "utf-8"


class CorpusError(Exception):
    """Input folder or one of its files cannot be used.

    `reason` is a stable machine-readable code: "no-input", "encoding" or
    "duplicate-doc".
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True)
class Token:
    text: str
    position: int


@dataclass(frozen=True)
class Document:
    doc_id: str
    ordinal: int
    tokens: tuple[Token, ...]


@dataclass(frozen=True)
class Corpus:
    documents: tuple[Document, ...]

    @property
    def total_tokens(self) -> int:
        return sum(len(doc.tokens) for doc in self.documents)


def _is_word_char(ch: str) -> bool:
    return ch.isalpha() or ch in _JOINERS


def _trim(fragment: str) -> str:
    """Strip leading/trailing non-letter characters from a fragment."""
    start, end = 0, len(fragment)
    while start < end and not fragment[start].isalpha():
        start += 1
    while end > start and not fragment[end - 1].isalpha():
        end -= 1
    return fragment[start:end]


def tokenize(text: str) -> list[Token]:
    """Split text into word tokens, Unicode-aware.

    A token is a maximal run of letters plus internal apostrophes/hyphens;
    every other character separates words. Leading and trailing non-letters
    are stripped from each run and runs left without a letter are dropped.
    Positions number the surviving tokens in reading order.
    """
    tokens: list[Token] = []
    i, n = 0, len(text)
    while i < n:
        if not _is_word_char(text[i]):
            i += 1
            continue
        j = i + 1
        while j < n and _is_word_char(text[j]):
            j += 1
        word = _trim(text[i:j])
        if word:
            tokens.append(Token(word, len(tokens)))
        i = j
    return tokens


def load_corpus(
    folder: str | Path,
    encoding: str = DEFAULT_ENCODING,
    glob: str = DEFAULT_GLOB,
) -> Corpus:
    """Read every file matching `glob` under `folder`, in lexicographic
    filename order, and tokenize each one into a Document.

    Raises CorpusError if the folder is missing or matches no file
    ("no-input"), if a file cannot be decoded ("encoding", message names the
    file), or if two files share a stem ("duplicate-doc").
    """
    folder = Path(folder)
    if not folder.is_dir():
        raise CorpusError("no-input", f"not a readable folder: {folder}")
    files = sorted((p for p in folder.glob(glob) if p.is_file()), key=lambda p: p.name)
    if not files:
        raise CorpusError("no-input", f"no files matching {glob!r} in {folder}")

    documents: list[Document] = []
    stems: dict[str, str] = {}
    for ordinal, path in enumerate(files):
        if path.stem in stems:
            raise CorpusError(
                "duplicate-doc",
                f"files {stems[path.stem]!r} and {path.name!r} would share doc id {path.stem!r}",
            )
        stems[path.stem] = path.name
        try:
            text = path.read_text(encoding=encoding)
        except UnicodeDecodeError as exc:
            raise CorpusError("encoding", f"cannot decode {path.name} as {encoding}: {exc}") from exc
        except LookupError as exc:
            raise CorpusError("encoding", f"unknown encoding {encoding!r}") from exc
        documents.append(Document(path.stem, ordinal, tuple(tokenize(text))))
    return Corpus(tuple(documents))
