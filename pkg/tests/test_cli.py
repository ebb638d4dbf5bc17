from __future__ import annotations

from pathlib import Path

import pytest

from storynet.analysis import (
    compute_frequencies,
    compute_interactions,
    frequencies_tsv,
    index_occurrences,
    interactions_tsv,
)
from storynet.cli import EXIT_CORPUS, EXIT_OK, EXIT_PROJECT, EXIT_USAGE, run
from storynet.corpus import load_corpus
from storynet.project import load_project, save_project
from storynet.wordlist import ExtractionConstraints, extract_raw_words

from conftest import synthetic_corpus, toy_registry, write_toy_corpus
from dot_parser import parse_dot


def test_extract_matches_library_output(toy_folder: Path, tmp_path: Path):
    out = tmp_path / "raw.tsv"
    code = run(["extract", "--folder", str(toy_folder), "--out", str(out), "--min-count", "1"])
    assert code == EXIT_OK
    expected = extract_raw_words(
        load_corpus(toy_folder), ExtractionConstraints(min_count=1)
    ).to_tsv()
    assert out.read_text(encoding="utf-8") == expected

def test_extract_prints_entry_count(toy_folder: Path, tmp_path: Path, capsys):
    out = tmp_path / "raw.tsv"
    run(["extract", "--folder", str(toy_folder), "--out", str(out), "--min-count", "1"])
    table = extract_raw_words(load_corpus(toy_folder), ExtractionConstraints(min_count=1))
    assert str(len(table)) in capsys.readouterr().out

def test_extract_empty_folder_exits_2(tmp_path: Path):
    empty = tmp_path / "empty"
    empty.mkdir()
    out = tmp_path / "raw.tsv"
    assert run(["extract", "--folder", str(empty), "--out", str(out)]) == EXIT_CORPUS

def test_extract_min_count_filters(toy_folder: Path, tmp_path: Path):
    loose, strict = tmp_path / "a.tsv", tmp_path / "b.tsv"
    run(["extract", "--folder", str(toy_folder), "--out", str(loose), "--min-count", "1"])
    run(["extract", "--folder", str(toy_folder), "--out", str(strict), "--min-count", "2"])
    loose_rows = loose.read_text(encoding="utf-8").splitlines()
    strict_rows = strict.read_text(encoding="utf-8").splitlines()
    assert len(strict_rows) < len(loose_rows)
    strict_words = {row.split("\t")[0] for row in strict_rows}
    loose_words = {row.split("\t")[0] for row in loose_rows}
    assert strict_words <= loose_words

def test_extract_needs_folder_or_project(tmp_path: Path):
    assert run(["extract", "--out", str(tmp_path / "x.tsv")]) == EXIT_USAGE

def test_analyze_writes_both_tsvs(toy_project_path: Path, tmp_path: Path):
    prefix = tmp_path / "out"
    assert run(["analyze", "--project", str(toy_project_path), "--out-prefix", str(prefix)]) == EXIT_OK
    project = load_project(toy_project_path)
    corpus = load_corpus(project.resolve_corpus_path(toy_project_path))
    index = index_occurrences(corpus, project.registry)
    freq = compute_frequencies(index, project.registry)
    inter = compute_interactions(index, project.params.make_kernel())
    assert (tmp_path / "out.frequencies.tsv").read_text(encoding="utf-8") == frequencies_tsv(
        freq, project.registry
    )
    assert (tmp_path / "out.interactions.tsv").read_text(encoding="utf-8") == interactions_tsv(
        inter, project.registry
    )

def test_analyze_worked_example_row(tmp_path: Path):
    # A at positions [0, 10], B at [5, 100] in one document: raw 1.75, score 1.00
    corpus_dir = tmp_path / "corpus"
    corpus_dir.mkdir()
    words = {0: "Aa", 10: "Aa", 5: "Bb", 100: "Bb"}
    text = " ".join(words.get(i, f"w{i}") for i in range(101))
    (corpus_dir / "01.txt").write_text(text, encoding="utf-8")

    from storynet.names import NameRegistry, NameType
    from storynet.project import ProjectFile

    registry = NameRegistry()
    registry.add_name("Aa", NameType.CHARACTER)
    registry.add_name("Bb", NameType.CHARACTER)
    project_path = tmp_path / "p.json"
    save_project(ProjectFile(corpus_path=str(corpus_dir), registry=registry), project_path)

    prefix = tmp_path / "toy"
    assert run(["analyze", "--project", str(project_path), "--out-prefix", str(prefix)]) == EXIT_OK
    rows = (tmp_path / "toy.interactions.tsv").read_text(encoding="utf-8").splitlines()
    assert rows == ["Aa\tBb\t1.75\t1.00"]

def test_analyze_single_name_warns(tmp_path: Path, toy_folder: Path, capsys):
    from storynet.names import NameRegistry, NameType
    from storynet.project import ProjectFile

    registry = NameRegistry()
    registry.add_name("Hagen", NameType.CHARACTER)
    project_path = tmp_path / "p.json"
    save_project(ProjectFile(corpus_path=str(toy_folder), registry=registry), project_path)
    assert run(["analyze", "--project", str(project_path), "--out-prefix", str(tmp_path / "o")]) == EXIT_OK
    captured = capsys.readouterr()
    assert "warning" in captured.err
    assert (tmp_path / "o.interactions.tsv").read_text(encoding="utf-8") == ""

def test_analyze_degenerate_cutoff_warns(toy_project_path: Path, tmp_path: Path, capsys):
    code = run([
        "analyze", "--project", str(toy_project_path),
        "--out-prefix", str(tmp_path / "o"), "--delta-s", "1",
    ])
    assert code == EXIT_OK
    assert "all zero" in capsys.readouterr().err

def test_render_writes_valid_gv(toy_project_path: Path, tmp_path: Path):
    out = tmp_path / "net.gv"
    assert run(["render", "--project", str(toy_project_path), "--out", str(out)]) == EXIT_OK
    parsed = parse_dot(out.read_text(encoding="utf-8"))
    assert parsed.nodes

def test_render_matches_library_bytes(toy_project_path: Path, tmp_path: Path):
    from storynet.analysis import apply_thresholds
    from storynet.graphout import emit_dot

    out = tmp_path / "net.gv"
    run(["render", "--project", str(toy_project_path), "--out", str(out)])

    project = load_project(toy_project_path)
    corpus = load_corpus(project.resolve_corpus_path(toy_project_path))
    index = index_occurrences(corpus, project.registry)
    freq = compute_frequencies(index, project.registry)
    inter = compute_interactions(index, project.params.make_kernel())
    network = apply_thresholds(freq, inter, project.params, project.registry)
    assert out.read_bytes() == emit_dot(network).encode("utf-8")

def test_render_help_shows_default_parameters(capsys):
    assert run(["render", "--help"]) == EXIT_OK
    text = " ".join(capsys.readouterr().out.split())
    for value in ("40", "0.2", "0.4", "0.35", "linear"):
        assert f"default: {value}" in text

def test_out_of_range_threshold_rejected(toy_project_path: Path, tmp_path: Path, capsys):
    code = run([
        "render", "--project", str(toy_project_path),
        "--out", str(tmp_path / "x.gv"), "--i-t", "1.01",
    ])
    assert code == EXIT_USAGE
    assert "[0, 1]" in capsys.readouterr().err

def test_unknown_flag_rejected():
    assert run(["render", "--nonsense"]) == EXIT_USAGE

def test_missing_project_file_exits_3(tmp_path: Path):
    code = run(["render", "--project", str(tmp_path / "no.json"), "--out", str(tmp_path / "x.gv")])
    assert code == EXIT_PROJECT

def test_invalid_project_file_exits_3(tmp_path: Path):
    bad = tmp_path / "bad.json"
    bad.write_text("{}", encoding="utf-8")
    code = run(["render", "--project", str(bad), "--out", str(tmp_path / "x.gv")])
    assert code == EXIT_PROJECT

def test_render_override_changes_output(toy_project_path: Path, tmp_path: Path):
    default_out = tmp_path / "a.gv"
    strict_out = tmp_path / "b.gv"
    run(["render", "--project", str(toy_project_path), "--out", str(default_out)])
    run(["render", "--project", str(toy_project_path), "--out", str(strict_out), "--i-t", "1.0"])
    default_edges = parse_dot(default_out.read_text(encoding="utf-8")).edges
    strict_edges = parse_dot(strict_out.read_text(encoding="utf-8")).edges
    assert len(strict_edges) <= len(default_edges)
    for _, _, attrs in strict_edges:
        assert attrs["label"] == "1.00"
