"""Local HTTP API backing the curation UI.

Loopback-only by design: the server reads and writes local paths on behalf
of a single user, mirroring a desktop tool's trust model. Sessions are
in-memory and independent; each one caches the corpus and the occurrence
index, and a registry mutation invalidates the index while parameter-only
changes reuse it.
"""

from __future__ import annotations

import threading
import uuid
from dataclasses import dataclass, field, replace

from fastapi import FastAPI, HTTPException, Query
from fastapi.responses import PlainTextResponse
from pydantic import BaseModel

from .analysis import (
    AnalysisParams,
    OccurrenceIndex,
    apply_thresholds,
    compute_frequencies,
    compute_interactions,
    index_occurrences,
)
from .corpus import Corpus, CorpusError, load_corpus
from .graphout import emit_dot
from .names import NameType, RegistryError
from .project import ProjectError, ProjectFile, load_project, save_project
from .wordlist import extract_raw_words

__all__ = ["create_app", "Session", "DEFAULT_PORT"]

DEFAULT_PORT = 7414


@dataclass
class Session:
    session_id: str
    project: ProjectFile
    corpus: Corpus
    lock: threading.Lock = field(default_factory=threading.Lock, repr=False)
    corpus_loads: int = 1
    index_builds: int = 0
    _index: OccurrenceIndex | None = field(default=None, repr=False)
    _raw_tables: dict = field(default_factory=dict, repr=False)

    def occurrence_index(self) -> OccurrenceIndex:
        if self._index is None:
            self._index = index_occurrences(self.corpus, self.project.registry)
            self.index_builds += 1
        return self._index

    def invalidate_index(self) -> None:
        self._index = None

    def raw_table(self, constraints):
        key = (constraints.min_length, constraints.require_capitalized, constraints.min_count)
        table = self._raw_tables.get(key)
        if table is None:
            table = extract_raw_words(self.corpus, constraints)
            self._raw_tables[key] = table
        return table


class OpenProjectRequest(BaseModel):
    folder: str | None = None
    project_path: str | None = None
    glob: str | None = None
    encoding: str | None = None


class RegistryMutation(BaseModel):
    op: str
    variant: str | None = None
    ntype: str | None = None
    name_id: str | None = None


class SaveRequest(BaseModel):
    path: str


def _registry_view(registry) -> dict:
    return {
        "names": [
            {"id": e.name_id, "type": e.ntype.value, "variants": list(e.variants)}
            for e in registry.entries
        ]
    }


def _params_view(params: AnalysisParams) -> dict:
    return {
        "delta_s": params.delta_s,
        "f_t_char": params.f_t_char,
        "f_t_place": params.f_t_place,
        "i_t": params.i_t,
        "kernel": params.kernel,
    }


def create_app() -> FastAPI:
    app = FastAPI(title="storynet", version="0.1.0")
    sessions: dict[str, Session] = {}
    app.state.sessions = sessions

    def get_session(session_id: str) -> Session:
        try:
            return sessions[session_id]
        except KeyError:
            raise HTTPException(404, f"unknown session {session_id!r}") from None

    def merged_params(session: Session, delta_s, f_t_char, f_t_place, i_t, kernel) -> AnalysisParams:
        changes = {
            name: value
            for name, value in (
                ("delta_s", delta_s),
                ("f_t_char", f_t_char),
                ("f_t_place", f_t_place),
                ("i_t", i_t),
                ("kernel", kernel),
            )
            if value is not None
        }
        try:
            return replace(session.project.params, **changes)
        except ValueError as exc:
            raise HTTPException(400, str(exc)) from exc

    def network_pieces(session: Session, params: AnalysisParams):
        index = session.occurrence_index()
        freq = compute_frequencies(index, session.project.registry)
        inter = compute_interactions(index, params.make_kernel())
        net = apply_thresholds(freq, inter, params, session.project.registry)
        return net, inter

    @app.post("/projects")
    def open_project(request: OpenProjectRequest):
        if bool(request.folder) == bool(request.project_path):
            raise HTTPException(400, "exactly one of 'folder' or 'project_path' is required")
        try:
            if request.project_path:
                project = load_project(request.project_path)
                if request.glob:
                    project = replace(project, glob=request.glob)
                if request.encoding:
                    project = replace(project, encoding=request.encoding)
                folder = project.resolve_corpus_path(request.project_path)
            else:
                project = ProjectFile(corpus_path=request.folder)
                if request.glob:
                    project = replace(project, glob=request.glob)
                if request.encoding:
                    project = replace(project, encoding=request.encoding)
                folder = project.resolve_corpus_path()
            corpus = load_corpus(folder, encoding=project.encoding, glob=project.glob)
        except (CorpusError, ProjectError) as exc:
            raise HTTPException(422, str(exc)) from exc

        session_id = uuid.uuid4().hex[:12]
        sessions[session_id] = Session(session_id, project, corpus)
        return {
            "session_id": session_id,
            "documents": len(corpus.documents),
            "tokens": corpus.total_tokens,
        }

    @app.get("/projects/{session_id}/raw-words")
    def raw_words(
        session_id: str,
        min_length: int | None = Query(None, ge=1),
        capitalized: bool | None = None,
        min_count: int | None = Query(None, ge=1),
        offset: int = Query(0, ge=0),
        limit: int = Query(100, ge=1, le=10000),
    ):
        session = get_session(session_id)
        constraints = session.project.constraints
        changes = {}
        if min_length is not None:
            changes["min_length"] = min_length
        if capitalized is not None:
            changes["require_capitalized"] = capitalized
        if min_count is not None:
            changes["min_count"] = min_count
        if changes:
            constraints = replace(constraints, **changes)
        with session.lock:  # never observe a half-applied registry mutation
            table = session.raw_table(constraints)
            registry = session.project.registry
            entries = [
                {
                    "word": row.word,
                    "count": row.count,
                    "doc_coverage": row.doc_coverage,
                    "assigned": registry.owner_of(row.word) is not None,
                }
                for row in table.rows[offset : offset + limit]
            ]
        return {"total": len(table), "offset": offset, "limit": limit, "entries": entries}

    @app.post("/projects/{session_id}/registry")
    def mutate_registry(session_id: str, mutation: RegistryMutation):
        session = get_session(session_id)
        with session.lock:
            registry = session.project.registry
            created_id = None
            try:
                if mutation.op == "add_name":
                    if not mutation.variant or not mutation.ntype:
                        raise HTTPException(400, "add_name needs 'variant' and 'ntype'")
                    try:
                        ntype = NameType(mutation.ntype)
                    except ValueError:
                        raise HTTPException(400, f"unknown name type {mutation.ntype!r}") from None
                    created_id = registry.add_name(mutation.variant, ntype)
                elif mutation.op == "add_variant":
                    if not mutation.name_id or not mutation.variant:
                        raise HTTPException(400, "add_variant needs 'name_id' and 'variant'")
                    registry.add_variant(mutation.name_id, mutation.variant)
                elif mutation.op == "remove_name":
                    if not mutation.name_id:
                        raise HTTPException(400, "remove_name needs 'name_id'")
                    registry.remove_name(mutation.name_id)
                else:
                    raise HTTPException(400, f"unknown op {mutation.op!r}")
            except RegistryError as exc:
                if exc.reason == "conflict":
                    detail = {"message": str(exc), "owner": exc.name_id}
                    raise HTTPException(409, detail) from exc
                raise HTTPException(404, str(exc)) from exc
            session.invalidate_index()
        view = _registry_view(registry)
        if created_id is not None:
            view["created_id"] = created_id
        return view

    @app.get("/projects/{session_id}/network")
    def network(
        session_id: str,
        delta_s: int | None = None,
        f_t_char: float | None = None,
        f_t_place: float | None = None,
        i_t: float | None = None,
        kernel: str | None = None,
    ):
        session = get_session(session_id)
        params = merged_params(session, delta_s, f_t_char, f_t_place, i_t, kernel)
        with session.lock:
            session.project = replace(session.project, params=params)
            net, inter = network_pieces(session, params)
        return {
            "nodes": [
                {"id": n.name_id, "name": n.label, "type": n.ntype.value, "f": n.score}
                for n in net.nodes
            ],
            "edges": [
                {"source": e.a, "target": e.b, "score": e.score} for e in net.edges
            ],
            "dot": emit_dot(net),
            "all_zero_interactions": inter.all_zero,
            "params": _params_view(params),
        }

    @app.get("/projects/{session_id}/export.gv")
    def export_gv(
        session_id: str,
        delta_s: int | None = None,
        f_t_char: float | None = None,
        f_t_place: float | None = None,
        i_t: float | None = None,
        kernel: str | None = None,
    ):
        session = get_session(session_id)
        params = merged_params(session, delta_s, f_t_char, f_t_place, i_t, kernel)
        with session.lock:
            net, _ = network_pieces(session, params)
        return PlainTextResponse(emit_dot(net), media_type="text/vnd.graphviz")

    @app.post("/projects/{session_id}/save")
    def save(session_id: str, request: SaveRequest):
        session = get_session(session_id)
        with session.lock:
            try:
                save_project(session.project, request.path)
            except OSError as exc:
                raise HTTPException(422, f"cannot write {request.path!r}: {exc}") from exc
        return {"ok": True, "path": request.path}

    return app
