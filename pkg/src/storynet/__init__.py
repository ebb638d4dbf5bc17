"""Interaction networks of characters and places extracted from text corpora.

Pipeline: load a folder of text files, list candidate "raw words" for human
curation, resolve curated name variants to token positions, score pairwise
interactions with a proximity kernel, threshold, and emit a Graphviz DOT
graph.
"""

from .analysis import (
    KERNELS,
    AnalysisParams,
    FrequencyTable,
    InteractionMatrix,
    NetworkEdge,
    NetworkModel,
    NetworkNode,
    OccurrenceIndex,
    ProximityKernel,
    apply_thresholds,
    compute_frequencies,
    compute_interactions,
    format_score,
    frequencies_tsv,
    index_occurrences,
    interactions_tsv,
    proximity,
)
from .corpus import Corpus, CorpusError, Document, Token, load_corpus, tokenize
from .graphout import DotStyle, emit_dot
from .names import NameEntry, NameRegistry, NameType, RegistryError
from .project import (
    SCHEMA_VERSION,
    ProjectError,
    ProjectFile,
    dumps_project,
    load_project,
    loads_project,
    save_project,
    with_overrides,
)
from .wordlist import ExtractionConstraints, RawWord, RawWordTable, extract_raw_words

__version__ = "0.1.0"
