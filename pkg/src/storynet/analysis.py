"""Occurrence indexing, frequency scores, proximity-weighted interaction
sums and threshold filtering.

Scoring model: every unordered pair of names accumulates, over all pairs of
their occurrences within one document, a proximity kernel of the word
distance between the two occurrences. Raw sums are normalized globally by
the maximum sum; per-name frequencies are normalized within each type class
(characters against the top character, places against the top place) so the
two threshold sliders stay comparable.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .corpus import Corpus
from .names import NameRegistry, NameType

__all__ = [
    "KERNELS",
    "ProximityKernel",
    "AnalysisParams",
    "OccurrenceIndex",
    "FrequencyTable",
    "InteractionMatrix",
    "NetworkNode",
    "NetworkEdge",
    "NetworkModel",
    "proximity",
    "index_occurrences",
    "compute_frequencies",
    "compute_interactions",
    "apply_thresholds",
    "frequencies_tsv",
    "interactions_tsv",
    "format_score",
]

KERNELS = ("linear", "exponential")

DEFAULT_DELTA_S = 40
DEFAULT_F_T_CHAR = 0.20
DEFAULT_F_T_PLACE = 0.40
DEFAULT_I_T = 0.35


@dataclass(frozen=True)
class ProximityKernel:
    """Decreasing map from word distance to [0, 1], zero beyond delta_s.

    "linear" is the ramp 1 - delta/delta_s clamped at zero; "exponential"
    decays as exp(-3*delta/delta_s) and is truncated to zero past the cutoff.
    """

    selector: str = "linear"
    delta_s: int = DEFAULT_DELTA_S

    def __post_init__(self):
        if self.selector not in KERNELS:
            raise ValueError(f"unknown kernel {self.selector!r}, expected one of {KERNELS}")
        if self.delta_s < 1:
            raise ValueError(f"delta_s must be >= 1, got {self.delta_s}")

    def __call__(self, delta: int) -> float:
        if delta < 0:
            raise ValueError(f"distance must be >= 0, got {delta}")
        if delta > self.delta_s:
            return 0.0
        if self.selector == "linear":
            return 1.0 - delta / self.delta_s
        return math.exp(-3.0 * delta / self.delta_s)


def proximity(delta: int, kernel: ProximityKernel) -> float:
    """Kernel value for a word distance; 1.0 at distance 0, 0.0 past the cutoff."""
    return kernel(delta)


@dataclass(frozen=True)
class AnalysisParams:
    delta_s: int = DEFAULT_DELTA_S
    f_t_char: float = DEFAULT_F_T_CHAR
    f_t_place: float = DEFAULT_F_T_PLACE
    i_t: float = DEFAULT_I_T
    kernel: str = "linear"

    def __post_init__(self):
        if self.delta_s < 1:
            raise ValueError(f"delta_s must be >= 1, got {self.delta_s}")
        for label in ("f_t_char", "f_t_place", "i_t"):
            value = getattr(self, label)
            if not 0.0 <= value <= 1.0:
                raise ValueError(f"{label} must be in [0, 1], got {value}")
        if self.kernel not in KERNELS:
            raise ValueError(f"unknown kernel {self.kernel!r}, expected one of {KERNELS}")

    def make_kernel(self) -> ProximityKernel:
        return ProximityKernel(self.kernel, self.delta_s)


@dataclass(frozen=True)
class OccurrenceIndex:
    """Per name, per document: sorted token positions of any of its variants.

    `doc_ids` preserves corpus order and `name_ids` registry order; both fix
    the summation order of the interaction sums so results are reproducible
    bit for bit.
    """

    positions: dict[str, dict[str, list[int]]]
    doc_ids: tuple[str, ...]
    name_ids: tuple[str, ...]

    def total(self, name_id: str) -> int:
        return sum(len(p) for p in self.positions.get(name_id, {}).values())


def index_occurrences(corpus: Corpus, registry: NameRegistry) -> OccurrenceIndex:
    """Scan the corpus once, attributing each token to the name owning it as
    a variant (exact, case-sensitive match)."""
    positions: dict[str, dict[str, list[int]]] = {e.name_id: {} for e in registry.entries}
    for doc in corpus.documents:
        for token in doc.tokens:
            name_id = registry.owner_of(token.text)
            if name_id is not None:
                positions[name_id].setdefault(doc.doc_id, []).append(token.position)
    return OccurrenceIndex(
        positions,
        tuple(doc.doc_id for doc in corpus.documents),
        tuple(entry.name_id for entry in registry.entries),
    )


@dataclass(frozen=True)
class FrequencyTable:
    """Raw occurrence counts and per-type-normalized scores in [0, 1]."""

    raw_counts: dict[str, int]
    scores: dict[str, float]


def compute_frequencies(index: OccurrenceIndex, registry: NameRegistry) -> FrequencyTable:
    """Total occurrences per name; score = count / max count among names of
    the same type (0.0 when the whole class has no occurrences)."""
    raw_counts = {name_id: index.total(name_id) for name_id in index.name_ids}
    class_max: dict[NameType, int] = {t: 0 for t in NameType}
    for entry in registry.entries:
        count = raw_counts.get(entry.name_id, 0)
        if count > class_max[entry.ntype]:
            class_max[entry.ntype] = count
    scores: dict[str, float] = {}
    for entry in registry.entries:
        count = raw_counts.get(entry.name_id, 0)
        top = class_max[entry.ntype]
        scores[entry.name_id] = count / top if top > 0 else 0.0
    return FrequencyTable(raw_counts, scores)


@dataclass(frozen=True)
class InteractionMatrix:
    """Symmetric pairwise scores, diagonal absent.

    Keys are unordered pairs in registry order; `raw` keeps the plain kernel
    sums, `scores` the sums divided by their global maximum (all zero when
    no pair co-occurs within the cutoff anywhere).
    """

    raw: dict[tuple[str, str], float]
    scores: dict[tuple[str, str], float]

    def _key(self, a: str, b: str) -> tuple[str, str] | None:
        if (a, b) in self.raw:
            return (a, b)
        if (b, a) in self.raw:
            return (b, a)
        return None

    def raw_sum(self, a: str, b: str) -> float:
        key = self._key(a, b)
        return self.raw[key] if key is not None else 0.0

    def score(self, a: str, b: str) -> float:
        key = self._key(a, b)
        return self.scores[key] if key is not None else 0.0

    @property
    def max_raw(self) -> float:
        return max(self.raw.values(), default=0.0)

    @property
    def all_zero(self) -> bool:
        return self.max_raw == 0.0


def compute_interactions(index: OccurrenceIndex, kernel: ProximityKernel) -> InteractionMatrix:
    """Sum kernel values over every same-document occurrence pair, for every
    unordered pair of names, then normalize by the global maximum sum.

    Summation order is fixed: documents in corpus order, positions of the
    first name ascending, positions of the second ascending. The inner loop
    only visits positions within the cutoff window; skipped terms are exact
    zeros, so the result equals the full all-pairs summation bit for bit.
    """
    names = index.name_ids
    cutoff = kernel.delta_s
    raw: dict[tuple[str, str], float] = {}
    for i, first in enumerate(names):
        first_docs = index.positions[first]
        for second in names[i + 1 :]:
            second_docs = index.positions[second]
            total = 0.0
            for doc_id in index.doc_ids:
                ps = first_docs.get(doc_id)
                qs = second_docs.get(doc_id)
                if not ps or not qs:
                    continue
                for p in ps:
                    lo = bisect_left(qs, p - cutoff)
                    hi = bisect_right(qs, p + cutoff)
                    for q in qs[lo:hi]:
                        total += kernel(abs(p - q))
            raw[(first, second)] = total
    top = max(raw.values(), default=0.0)
    if top > 0.0:
        scores = {pair: value / top for pair, value in raw.items()}
    else:
        scores = {pair: 0.0 for pair in raw}
    return InteractionMatrix(raw, scores)


@dataclass(frozen=True)
class NetworkNode:
    name_id: str
    label: str
    ntype: NameType
    score: float


@dataclass(frozen=True)
class NetworkEdge:
    a: str
    b: str
    score: float


@dataclass(frozen=True)
class NetworkModel:
    nodes: tuple[NetworkNode, ...] = ()
    edges: tuple[NetworkEdge, ...] = ()

    def node_ids(self) -> set[str]:
        return {node.name_id for node in self.nodes}


def apply_thresholds(
    freq: FrequencyTable,
    inter: InteractionMatrix,
    params: AnalysisParams,
    registry: NameRegistry,
) -> NetworkModel:
    """Keep names whose frequency score reaches their type's threshold and
    edges at or above i_t whose endpoints both survived. Thresholds are
    inclusive; nodes may end up with no edges (isolated places and the like),
    but no edge ever references a dropped node."""
    f_t = {NameType.CHARACTER: params.f_t_char, NameType.PLACE: params.f_t_place}
    nodes = tuple(
        NetworkNode(entry.name_id, entry.main_variant, entry.ntype, freq.scores[entry.name_id])
        for entry in registry.entries
        if freq.scores[entry.name_id] >= f_t[entry.ntype]
    )
    kept = {node.name_id for node in nodes}
    edges = tuple(
        NetworkEdge(a, b, score)
        for (a, b), score in inter.scores.items()
        if score >= params.i_t and a in kept and b in kept
    )
    return NetworkModel(nodes, edges)


def format_score(value: float, decimals: int = 2) -> str:
    """Fixed-point label for a score, rounding halves away from zero."""
    quantum = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(value)).quantize(quantum, rounding=ROUND_HALF_UP))


def frequencies_tsv(freq: FrequencyTable, registry: NameRegistry) -> str:
    """`name<TAB>raw_count<TAB>score` rows, score descending then name."""
    rows = [
        (entry.main_variant, freq.raw_counts[entry.name_id], freq.scores[entry.name_id])
        for entry in registry.entries
    ]
    rows.sort(key=lambda r: (-r[2], r[0]))
    return "".join(f"{name}\t{count}\t{format_score(score)}\n" for name, count, score in rows)


def interactions_tsv(inter: InteractionMatrix, registry: NameRegistry) -> str:
    """`name1<TAB>name2<TAB>raw_sum<TAB>score` rows, score descending then names."""
    rows = []
    for (a, b), score in inter.scores.items():
        name_a = registry.entry(a).main_variant
        name_b = registry.entry(b).main_variant
        if name_b < name_a:
            name_a, name_b = name_b, name_a
        rows.append((name_a, name_b, inter.raw[(a, b)], score))
    rows.sort(key=lambda r: (-r[3], r[0], r[1]))
    return "".join(
        f"{a}\t{b}\t{format_score(raw)}\t{format_score(score)}\n" for a, b, raw, score in rows
    )
