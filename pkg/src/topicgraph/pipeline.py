"""One pipeline from query text to a serializable topic word graph.

Both the CLI and the HTTP service call build_graph, so the two paths
can never drift apart: identical inputs produce identical payloads.
The payload serializes with a stable field order and an explicit
schema_version so responses can be byte-compared in golden tests.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any

from .corpus import CorpusIndex
from .extraction import (
    ClassConfig,
    TopicWord,
    class_partition,
    classify,
    select_topic_words_classed,
    select_topic_words_plain,
)
from .layout import LayoutConfig, LayoutResult, canvas_y, layout_graph
from .links import LinkTable, build_links
from .retrieval import Query, RetrievedSet, execute_query

SCHEMA_VERSION = 1

MODES = ("classed", "plain")


@dataclass(frozen=True)
class GraphPayload:
    """The full response for one graph request.

    nodes, edges and class_boundaries are already plain dicts in wire
    shape; to_dict only assembles them in the canonical key order.
    DF in a node dict is the global document frequency (df is the
    within-results one).
    """

    query: str
    terms: tuple[str, ...]
    result_count: int
    params: dict[str, Any]
    nodes: tuple[dict[str, Any], ...]
    edges: tuple[dict[str, Any], ...]
    class_boundaries: tuple[dict[str, Any], ...]
    spacing: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {
            "schema_version": SCHEMA_VERSION,
            "query": self.query,
            "terms": list(self.terms),
            "result_count": self.result_count,
            "params": dict(self.params),
            "nodes": [dict(n) for n in self.nodes],
            "edges": [dict(e) for e in self.edges],
            "class_boundaries": [dict(b) for b in self.class_boundaries],
            "spacing": dict(self.spacing),
        }

    def to_json(self) -> str:
        """Canonical serialization: compact separators, fixed key order,
        no NaN/Infinity. Byte-identical for identical payloads."""
        return json.dumps(
            self.to_dict(), ensure_ascii=False, separators=(",", ":"), allow_nan=False
        )


def _params_echo(class_cfg: ClassConfig, layout_cfg: LayoutConfig, mode: str) -> dict[str, Any]:
    return {
        "n": class_cfg.n,
        "c": class_cfg.c,
        "l": class_cfg.l,
        "b": class_cfg.b,
        "mode": mode,
        "width": layout_cfg.width,
        "height": layout_cfg.height,
        "min_dx": layout_cfg.min_dx,
        "c1": layout_cfg.c1,
        "c2": layout_cfg.c2,
        "band_height": layout_cfg.band_height,
    }


def _node_dicts(
    topic_words: list[TopicWord],
    layout: LayoutResult,
    mode: str,
    partition,
) -> tuple[dict[str, Any], ...]:
    nodes = []
    for tw, placed in zip(topic_words, layout.nodes):
        if mode == "classed":
            class_idx = tw.class_idx
        elif partition is not None:
            # Plain selection ignores classes; still report where the word
            # would fall so clients can colour both modes alike. 0 marks
            # "below the exclusion limit".
            class_idx = classify(tw.df, partition) or 0
        else:
            class_idx = 0
        nodes.append(
            {
                "word": tw.word,
                "df": tw.df,
                "DF": tw.df_global,
                "rel_freq": tw.rel_freq,
                "class_idx": class_idx,
                "x": placed.x,
                "y": placed.y,
            }
        )
    return tuple(nodes)


def _edge_dicts(topic_words: list[TopicWord], links: LinkTable) -> tuple[dict[str, Any], ...]:
    edges = []
    for tw in topic_words:
        parent = links.parent(tw.word)
        if parent is not None:
            edges.append(
                {"child": tw.word, "parent": parent, "strength": links.strengths[tw.word]}
            )
    return tuple(edges)


def _boundary_dicts(
    partition, layout: LayoutResult, layout_cfg: LayoutConfig
) -> tuple[dict[str, Any], ...]:
    """Horizontal guide lines at the df thresholds between adjacent
    classes (c-1 internal boundaries), mapped with the same y transform
    as the nodes."""
    if partition is None or not layout.nodes:
        return ()
    boundaries = []
    for k in range(1, len(partition.bounds)):
        threshold = partition.bounds[k - 1][0]
        boundaries.append(
            {"df_threshold": threshold, "y": canvas_y(threshold, layout.df_m, layout_cfg)}
        )
    return tuple(boundaries)


def build_graph(
    index: CorpusIndex,
    query_text: str,
    class_cfg: ClassConfig | None = None,
    layout_cfg: LayoutConfig | None = None,
    mode: str = "classed",
) -> GraphPayload:
    """Run retrieval, selection, linking and layout for one query.

    Raises EmptyQueryError for a query with no usable terms and
    ValueError for an unknown mode; an empty retrieval is not an error
    and yields a payload with result_count 0 and no nodes.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    class_cfg = class_cfg or ClassConfig()
    layout_cfg = layout_cfg or LayoutConfig()
    params = _params_echo(class_cfg, layout_cfg, mode)

    query = Query.from_text(query_text, index)
    rs = execute_query(index, query)
    if not rs:
        return GraphPayload(
            query=query_text,
            terms=query.terms,
            result_count=0,
            params=params,
            nodes=(),
            edges=(),
            class_boundaries=(),
            spacing={"effective": layout_cfg.min_dx, "relaxed": False},
        )

    if mode == "classed":
        topic_words = select_topic_words_classed(rs, index, class_cfg)
    else:
        topic_words = select_topic_words_plain(rs, index, class_cfg.n)
    partition = class_partition(rs.M, class_cfg)
    links = build_links(topic_words, rs, index)
    layout = layout_graph(topic_words, links, layout_cfg)

    # Boundary guide lines belong to classed rendering; plain mode mirrors
    # the classless display and gets none.
    boundaries = _boundary_dicts(partition, layout, layout_cfg) if mode == "classed" else ()
    return GraphPayload(
        query=query_text,
        terms=query.terms,
        result_count=rs.size,
        params=params,
        nodes=_node_dicts(topic_words, layout, mode, partition),
        edges=_edge_dicts(topic_words, links),
        class_boundaries=boundaries,
        spacing={"effective": layout.effective_spacing, "relaxed": layout.relaxed},
    )


def search_payload(index: CorpusIndex, query_text: str, page_size: int = 20) -> dict[str, Any]:
    """Title listing for a query: result_count plus the first page_size
    (doc_id, title) pairs in doc_id order. Same canonical-order idea as
    GraphPayload."""
    if page_size < 0:
        raise ValueError(f"page_size must be >= 0, got {page_size}")
    query = Query.from_text(query_text, index)
    rs = execute_query(index, query)
    titles = [
        {"doc_id": doc_id, "title": index.titles[doc_id]}
        for doc_id in rs.doc_ids[:page_size]
    ]
    return {
        "schema_version": SCHEMA_VERSION,
        "query": query_text,
        "terms": list(query.terms),
        "result_count": rs.size,
        "titles": titles,
    }


def to_dot(payload: GraphPayload) -> str:
    """DOT rendering of the graph: directed child -> parent edges, node
    labels "word (df)". Deterministic: follows payload order."""
    lines = ["digraph topics {"]
    for node in payload.nodes:
        lines.append(f'  "{node["word"]}" [label="{node["word"]} ({node["df"]})"];')
    for edge in payload.edges:
        lines.append(f'  "{edge["child"]}" -> "{edge["parent"]}";')
    lines.append("}")
    return "\n".join(lines)


def to_text(payload: GraphPayload) -> str:
    """Plain human-readable listing for terminal use."""
    p = payload.params
    lines = [
        f"query: {payload.query}",
        f"terms: {' '.join(payload.terms)}",
        f"results: {payload.result_count}",
        f"mode: {p['mode']} (n={p['n']} c={p['c']} l={p['l']} b={p['b']})",
    ]
    if not payload.nodes:
        lines.append("no topic words")
        return "\n".join(lines)
    lines.append("topic words:")
    parents = {e["child"]: e for e in payload.edges}
    width = max(len(n["word"]) for n in payload.nodes)
    for node in payload.nodes:
        edge = parents.get(node["word"])
        link = f"-> {edge['parent']} ({edge['strength']:.3f})" if edge else "(root)"
        lines.append(
            f"  {node['word']:<{width}}  df={node['df']:<5d} DF={node['DF']:<5d}"
            f" rel={node['rel_freq']:.3f}  class={node['class_idx']}  {link}"
        )
    if payload.class_boundaries:
        marks = ", ".join(f"{b['df_threshold']:.2f}" for b in payload.class_boundaries)
        lines.append(f"class boundaries at df: {marks}")
    return "\n".join(lines)
