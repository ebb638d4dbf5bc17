"""Candidate name words ("raw words"): tokens filtered by configurable
constraints, counted over the corpus, for the human to curate into names."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import Corpus

__all__ = ["ExtractionConstraints", "RawWord", "RawWordTable", "extract_raw_words"]


@dataclass(frozen=True)
class ExtractionConstraints:
    min_length: int = 3
    require_capitalized: bool = True
    min_count: int = 2

    def __post_init__(self):
        if self.min_length < 1:
            raise ValueError(f"min_length must be >= 1, got {self.min_length}")
        if self.min_count < 1:
            raise ValueError(f"min_count must be >= 1, got {self.min_count}")


@dataclass(frozen=True)
class RawWord:
    word: str
    count: int
    doc_coverage: int


@dataclass(frozen=True)
class RawWordTable:
    """Raw words ordered by count descending, ties broken lexicographically."""

    rows: tuple[RawWord, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def __contains__(self, word: str) -> bool:
        return any(row.word == word for row in self.rows)

    def counts(self) -> dict[str, int]:
        return {row.word: row.count for row in self.rows}

    def to_tsv(self) -> str:
        """One `word<TAB>count<TAB>doc_coverage` line per entry, table order."""
        return "".join(f"{r.word}\t{r.count}\t{r.doc_coverage}\n" for r in self.rows)


def _letter_count(word: str) -> int:
    return sum(1 for ch in word if ch.isalpha())


def extract_raw_words(corpus: Corpus, constraints: ExtractionConstraints) -> RawWordTable:
    """Count every token that passes the length/capitalization constraints,
    then keep words whose total count reaches min_count.

    Matching is case-sensitive on the exact token text; "hagen" and "Hagen"
    are distinct raw words (variant grouping is the curation step's job).
    """
    counts: Counter[str] = Counter()
    coverage: Counter[str] = Counter()
    for doc in corpus.documents:
        seen: set[str] = set()
        for token in doc.tokens:
            word = token.text
            if _letter_count(word) < constraints.min_length:
                continue
            if constraints.require_capitalized and not word[0].isupper():
                continue
            counts[word] += 1
            seen.add(word)
        coverage.update(seen)

    rows = [
        RawWord(word, count, coverage[word])
        for word, count in counts.items()
        if count >= constraints.min_count
    ]
    rows.sort(key=lambda r: (-r.count, r.word))
    return RawWordTable(tuple(rows))
