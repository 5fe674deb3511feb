"""Interactive retrieval guidance through topic word graphs.

Given a conjunctive query over an inverted index, the package selects
the most characteristic words of the retrieved documents (ranked by
df/DF, optionally balanced across geometric frequency classes), links
each word to the co-occurring higher-frequency word that best predicts
it, and lays the resulting forest out on a canvas whose vertical axis
is arctan-squashed log frequency. The graph is served over HTTP and a
CLI for query refinement loops.
"""

from .corpus import (
    CorpusIndex,
    CorruptIndexError,
    Document,
    DuplicateDocIdError,
    IndexVersionError,
    Tokenizer,
    build_index,
    load_index,
    read_corpus_dir,
    read_corpus_jsonl,
    save_index,
    tokenize,
)
from .extraction import (
    ClassConfig,
    ClassPartition,
    TopicWord,
    allotment_caps,
    class_partition,
    classify,
    relative_frequency,
    select_topic_words_classed,
    select_topic_words_plain,
)
from .layout import LayoutConfig, LayoutResult, PlacedNode, layout_graph, layout_y, middle_frequency
from .links import LinkTable, build_links, cooccur_strength
from .pipeline import GraphPayload, build_graph, search_payload, to_dot, to_text
from .retrieval import EmptyQueryError, Query, RetrievedSet, cooccurrence_freq, execute_query
from .service import ServiceConfig, create_app, load_config, serve

__version__ = "0.1.0"

__all__ = [
    "CorpusIndex",
    "CorruptIndexError",
    "Document",
    "DuplicateDocIdError",
    "IndexVersionError",
    "Tokenizer",
    "build_index",
    "load_index",
    "read_corpus_dir",
    "read_corpus_jsonl",
    "save_index",
    "tokenize",
    "ClassConfig",
    "ClassPartition",
    "TopicWord",
    "allotment_caps",
    "class_partition",
    "classify",
    "relative_frequency",
    "select_topic_words_classed",
    "select_topic_words_plain",
    "LayoutConfig",
    "LayoutResult",
    "PlacedNode",
    "layout_graph",
    "layout_y",
    "middle_frequency",
    "LinkTable",
    "build_links",
    "cooccur_strength",
    "GraphPayload",
    "build_graph",
    "search_payload",
    "to_dot",
    "to_text",
    "EmptyQueryError",
    "Query",
    "RetrievedSet",
    "cooccurrence_freq",
    "execute_query",
    "ServiceConfig",
    "create_app",
    "load_config",
    "serve",
    "__version__",
]
