"""Project files: one JSON document holding the corpus location, extraction
constraints, analysis parameters and the curated name registry.

The format is versioned, human-inspectable and diff-friendly; saving the
same project twice produces byte-identical files.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from pathlib import Path

from .analysis import AnalysisParams
from .corpus import DEFAULT_ENCODING, DEFAULT_GLOB
from .names import NameEntry, NameRegistry, NameType, RegistryError
from .wordlist import ExtractionConstraints

__all__ = [
    "SCHEMA_VERSION",
    "ProjectFile",
    "ProjectError",
    "save_project",
    "load_project",
    "dumps_project",
    "loads_project",
    "with_overrides",
]

SCHEMA_VERSION = 1


class ProjectError(Exception):
    """Project file cannot be read or violates an invariant.

    `reason` is "version", "format" or "invariant".
    """

    def __init__(self, reason: str, message: str):
        super().__init__(message)
        self.reason = reason


@dataclass
class ProjectFile:
    corpus_path: str = ""
    glob: str = DEFAULT_GLOB
    encoding: str = DEFAULT_ENCODING
    constraints: ExtractionConstraints = field(default_factory=ExtractionConstraints)
    params: AnalysisParams = field(default_factory=AnalysisParams)
    registry: NameRegistry = field(default_factory=NameRegistry)
    schema_version: int = SCHEMA_VERSION

    def resolve_corpus_path(self, project_path: str | Path | None = None) -> Path:
        """Corpus folder; a relative path is anchored at the project file's
        directory when one is given."""
        corpus = Path(self.corpus_path)
        if project_path is not None and not corpus.is_absolute():
            return Path(project_path).parent / corpus
        return corpus


def _to_dict(project: ProjectFile) -> dict:
    return {
        "schema_version": project.schema_version,
        "corpus_path": project.corpus_path,
        "glob": project.glob,
        "encoding": project.encoding,
        "constraints": {
            "min_length": project.constraints.min_length,
            "require_capitalized": project.constraints.require_capitalized,
            "min_count": project.constraints.min_count,
        },
        "params": {
            "delta_s": project.params.delta_s,
            "f_t_char": project.params.f_t_char,
            "f_t_place": project.params.f_t_place,
            "i_t": project.params.i_t,
            "kernel": project.params.kernel,
        },
        "names": [
            {"id": e.name_id, "type": e.ntype.value, "variants": list(e.variants)}
            for e in project.registry.entries
        ],
    }


def dumps_project(project: ProjectFile) -> str:
    return json.dumps(_to_dict(project), ensure_ascii=False, indent=2) + "\n"


def save_project(project: ProjectFile, path: str | Path) -> None:
    Path(path).write_text(dumps_project(project), encoding="utf-8")


def _require(mapping: dict, key: str, kind: type, where: str):
    try:
        value = mapping[key]
    except (KeyError, TypeError):
        raise ProjectError("format", f"missing {key!r} in {where}") from None
    if kind is float:
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ProjectError("format", f"{where}.{key} must be a number")
        return float(value)
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise ProjectError("format", f"{where}.{key} must be {kind.__name__}")
    return value


def loads_project(text: str) -> ProjectFile:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ProjectError("format", f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ProjectError("format", "project file must hold a JSON object")

    version = _require(data, "schema_version", int, "project")
    if version != SCHEMA_VERSION:
        raise ProjectError("version", f"unsupported schema_version {version}")

    constraints_data = _require(data, "constraints", dict, "project")
    params_data = _require(data, "params", dict, "project")
    names_data = _require(data, "names", list, "project")

    try:
        constraints = ExtractionConstraints(
            min_length=_require(constraints_data, "min_length", int, "constraints"),
            require_capitalized=_require(constraints_data, "require_capitalized", bool, "constraints"),
            min_count=_require(constraints_data, "min_count", int, "constraints"),
        )
        params = AnalysisParams(
            delta_s=_require(params_data, "delta_s", int, "params"),
            f_t_char=_require(params_data, "f_t_char", float, "params"),
            f_t_place=_require(params_data, "f_t_place", float, "params"),
            i_t=_require(params_data, "i_t", float, "params"),
            kernel=_require(params_data, "kernel", str, "params"),
        )
    except ValueError as exc:
        raise ProjectError("invariant", str(exc)) from exc

    entries = []
    for item in names_data:
        if not isinstance(item, dict):
            raise ProjectError("format", "each name must be an object")
        type_label = _require(item, "type", str, "name")
        try:
            ntype = NameType(type_label)
        except ValueError:
            raise ProjectError("format", f"unknown name type {type_label!r}") from None
        variants = _require(item, "variants", list, "name")
        if not all(isinstance(v, str) for v in variants):
            raise ProjectError("format", "variants must be strings")
        entries.append(NameEntry(_require(item, "id", str, "name"), ntype, list(variants)))
    try:
        registry = NameRegistry(entries)
    except RegistryError as exc:
        raise ProjectError("invariant", str(exc)) from exc

    return ProjectFile(
        corpus_path=_require(data, "corpus_path", str, "project"),
        glob=_require(data, "glob", str, "project"),
        encoding=_require(data, "encoding", str, "project"),
        constraints=constraints,
        params=params,
        registry=registry,
        schema_version=version,
    )


def load_project(path: str | Path) -> ProjectFile:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ProjectError("format", f"cannot read {path}: {exc}") from exc
    return loads_project(text)


def with_overrides(project: ProjectFile, **params_fields) -> ProjectFile:
    """Copy of `project` with the given non-None AnalysisParams fields replaced."""
    changes = {k: v for k, v in params_fields.items() if v is not None}
    if not changes:
        return project
    return replace(project, params=replace(project.params, **changes))
