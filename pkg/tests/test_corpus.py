from __future__ import annotations

from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from storynet.corpus import CorpusError, load_corpus, tokenize


class TestTokenize:
    def test_empty_text(self):
        assert tokenize("") == []

    def test_strips_edge_punctuation(self):
        assert [t.text for t in tokenize("Sîvrit, der helt,")] == ["Sîvrit", "der", "helt"]

    def test_em_dash_separates(self):
        assert [t.text for t in tokenize("Wormez—dâ")] == ["Wormez", "dâ"]

    def test_positions_in_reading_order(self):
        tokens = tokenize("Hagen von Tronege.")
        assert [(t.text, t.position) for t in tokens] == [
            ("Hagen", 0),
            ("von", 1),
            ("Tronege", 2),
        ]

    def test_internal_apostrophe_and_hyphen_kept(self):
        assert [t.text for t in tokenize("d'Artagnan guot-man")] == ["d'Artagnan", "guot-man"]

    def test_edge_joiners_stripped(self):
        assert [t.text for t in tokenize("'Hagen' -Tronege- Rin-")] == ["Hagen", "Tronege", "Rin"]

    def test_punctuation_only_fragments_dropped(self):
        assert tokenize("... --- !!! 123") == []

    def test_mittelhochdeutsch_letters_survive(self):
        words = [t.text for t in tokenize("Âventiure: Sîvrit unde Prünhilt ze Wormez")]
        assert words == ["Âventiure", "Sîvrit", "unde", "Prünhilt", "ze", "Wormez"]

    @settings(deadline=None, max_examples=200)
    @given(st.text(max_size=80))
    def test_deterministic_and_substrings(self, text):
        first = tokenize(text)
        second = tokenize(text)
        assert first == second
        for token in first:
            assert token.text in text
            assert token.text and token.text[0].isalpha() and token.text[-1].isalpha()
        assert [t.position for t in first] == list(range(len(first)))


class TestLoadCorpus:
    def test_lexicographic_order_and_ordinals(self, toy_folder: Path):
        corpus = load_corpus(toy_folder)
        assert [d.doc_id for d in corpus.documents] == ["01", "02"]
        assert [d.ordinal for d in corpus.documents] == [0, 1]
        assert corpus.total_tokens == sum(len(d.tokens) for d in corpus.documents)

    def test_empty_folder_rejected(self, tmp_path: Path):
        empty = tmp_path / "empty"
        empty.mkdir()
        with pytest.raises(CorpusError) as err:
            load_corpus(empty)
        assert err.value.reason == "no-input"

    def test_missing_folder_rejected(self, tmp_path: Path):
        with pytest.raises(CorpusError) as err:
            load_corpus(tmp_path / "nowhere")
        assert err.value.reason == "no-input"

    def test_single_file_tokens(self, tmp_path: Path):
        (tmp_path / "a.txt").write_text("Hagen von Tronege.", encoding="utf-8")
        corpus = load_corpus(tmp_path)
        (doc,) = corpus.documents
        assert [(t.text, t.position) for t in doc.tokens] == [
            ("Hagen", 0),
            ("von", 1),
            ("Tronege", 2),
        ]

    def test_undecodable_file_names_the_file(self, tmp_path: Path):
        (tmp_path / "bad.txt").write_bytes(b"Pr\xfcnhilt")  # latin-1 bytes
        with pytest.raises(CorpusError) as err:
            load_corpus(tmp_path)
        assert err.value.reason == "encoding"
        assert "bad.txt" in str(err.value)

    def test_encoding_override(self, tmp_path: Path):
        (tmp_path / "a.txt").write_bytes("Prünhilt".encode("latin-1"))
        corpus = load_corpus(tmp_path, encoding="latin-1")
        assert corpus.documents[0].tokens[0].text == "Prünhilt"

    def test_glob_override(self, tmp_path: Path):
        (tmp_path / "a.txt").write_text("Hagen", encoding="utf-8")
        (tmp_path / "b.text").write_text("Sîvrit", encoding="utf-8")
        corpus = load_corpus(tmp_path, glob="*.text")
        assert [d.doc_id for d in corpus.documents] == ["b"]

    def test_duplicate_stems_rejected(self, tmp_path: Path):
        (tmp_path / "a.txt").write_text("Hagen", encoding="utf-8")
        (tmp_path / "a.text").write_text("Hagen", encoding="utf-8")
        with pytest.raises(CorpusError) as err:
            load_corpus(tmp_path, glob="a.*")
        assert err.value.reason == "duplicate-doc"

    def test_positions_are_per_document(self, toy_folder: Path):
        corpus = load_corpus(toy_folder)
        for doc in corpus.documents:
            assert [t.position for t in doc.tokens] == list(range(len(doc.tokens)))
