"""Payload assembly: invariants, canonical serialization, export formats."""

import json
import random

import pytest

from corpora import FIXTURE_QUERY, random_corpus
from topicgraph.corpus import build_index
from topicgraph.extraction import ClassConfig
from topicgraph.layout import LayoutConfig
from topicgraph.pipeline import SCHEMA_VERSION, build_graph, search_payload, to_dot, to_text
from topicgraph.retrieval import EmptyQueryError


TOP_LEVEL_KEYS = [
    "schema_version",
    "query",
    "terms",
    "result_count",
    "params",
    "nodes",
    "edges",
    "class_boundaries",
    "spacing",
]


class TestBuildGraph:
    def test_payload_invariants(self, fixture_index):
        payload = build_graph(fixture_index, FIXTURE_QUERY)
        assert payload.result_count == 55
        assert len(payload.nodes) <= payload.params["n"]
        words = {n["word"] for n in payload.nodes}
        for edge in payload.edges:
            assert edge["child"] in words
            assert edge["parent"] in words
            assert 0.0 < edge["strength"] <= 1.0
        for node in payload.nodes:
            assert 1 <= node["df"] <= 55
            assert node["df"] <= node["DF"]
            assert node["rel_freq"] == node["df"] / node["DF"]
            assert 0.0 <= node["x"] <= payload.params["width"]
            assert 0.0 <= node["y"] <= payload.params["height"]

    def test_terms_echo(self, fixture_index):
        payload = build_graph(fixture_index, FIXTURE_QUERY)
        assert payload.query == FIXTURE_QUERY
        assert payload.terms == ("global", "environment")

    def test_empty_retrieval_is_a_payload_not_an_error(self, fixture_index):
        payload = build_graph(fixture_index, "global seagrass ozone")
        assert payload.result_count == 0
        assert payload.nodes == ()
        assert payload.edges == ()
        assert payload.class_boundaries == ()

    def test_unusable_query_raises(self, fixture_index):
        with pytest.raises(EmptyQueryError):
            build_graph(fixture_index, "of the")

    def test_unknown_mode_rejected(self, fixture_index):
        with pytest.raises(ValueError, match="mode"):
            build_graph(fixture_index, FIXTURE_QUERY, mode="fancy")

    def test_single_topic_word_has_no_edges(self, fixture_index):
        payload = build_graph(fixture_index, FIXTURE_QUERY, class_cfg=ClassConfig(n=1))
        assert len(payload.nodes) == 1
        assert payload.edges == ()

    def test_class_boundaries_only_in_classed_mode(self, fixture_index):
        classed = build_graph(fixture_index, FIXTURE_QUERY, mode="classed")
        plain = build_graph(fixture_index, FIXTURE_QUERY, mode="plain")
        assert len(classed.class_boundaries) == classed.params["c"] - 1
        assert plain.class_boundaries == ()

    def test_class_boundaries_values(self, fixture_index):
        payload = build_graph(fixture_index, FIXTURE_QUERY, class_cfg=ClassConfig(c=3))
        r = (1 / 32) ** (1 / 3)
        thresholds = [b["df_threshold"] for b in payload.class_boundaries]
        assert thresholds == pytest.approx([55 * r, 55 * r * r])
        # Boundary guide lines sit between the y of the classes they split.
        ys = {n["word"]: n["y"] for n in payload.nodes}
        for boundary in payload.class_boundaries:
            assert 0.0 <= boundary["y"] <= payload.params["height"]

    def test_plain_mode_reports_descriptive_class(self, fixture_index):
        payload = build_graph(fixture_index, FIXTURE_QUERY, mode="plain")
        by_word = {n["word"]: n for n in payload.nodes}
        assert by_word["global"]["class_idx"] == 1
        assert by_word["seagrass"]["class_idx"] == 0  # below the exclusion limit

    def test_params_echo_includes_both_configs(self, fixture_index):
        payload = build_graph(
            fixture_index,
            FIXTURE_QUERY,
            class_cfg=ClassConfig(n=7, c=2, l=0.5, b=-0.25),
            layout_cfg=LayoutConfig(width=640.0, height=480.0, min_dx=30.0),
            mode="plain",
        )
        p = payload.params
        assert (p["n"], p["c"], p["l"], p["b"], p["mode"]) == (7, 2, 0.5, -0.25, "plain")
        assert (p["width"], p["height"], p["min_dx"]) == (640.0, 480.0, 30.0)


class TestCanonicalSerialization:
    def test_key_order_is_stable(self, fixture_index):
        payload = build_graph(fixture_index, FIXTURE_QUERY)
        decoded = json.loads(payload.to_json())
        assert list(decoded) == TOP_LEVEL_KEYS
        assert list(decoded["nodes"][0]) == ["word", "df", "DF", "rel_freq", "class_idx", "x", "y"]
        assert list(decoded["edges"][0]) == ["child", "parent", "strength"]
        assert list(decoded["class_boundaries"][0]) == ["df_threshold", "y"]
        assert decoded["schema_version"] == SCHEMA_VERSION

    def test_serialization_is_byte_deterministic(self, fixture_index):
        a = build_graph(fixture_index, FIXTURE_QUERY).to_json()
        b = build_graph(fixture_index, FIXTURE_QUERY).to_json()
        assert a.encode() == b.encode()

    def test_round_trips_through_json(self, fixture_index):
        payload = build_graph(fixture_index, FIXTURE_QUERY)
        decoded = json.loads(payload.to_json())
        assert decoded == payload.to_dict()

    def test_compact_no_whitespace(self, fixture_index):
        body = build_graph(fixture_index, FIXTURE_QUERY).to_json()
        assert ": " not in body and ", " not in body


class TestSearchPayload:
    def test_returns_count_and_page(self, fixture_index):
        payload = search_payload(fixture_index, FIXTURE_QUERY, page_size=10)
        assert payload["result_count"] == 55
        assert len(payload["titles"]) == 10
        assert payload["titles"][0]["doc_id"] == 0
        assert payload["schema_version"] == SCHEMA_VERSION

    def test_page_larger_than_results(self, fixture_index):
        payload = search_payload(fixture_index, "ozone", page_size=100)
        assert payload["result_count"] == 22
        assert len(payload["titles"]) == 22

    def test_titles_match_index(self, fixture_index):
        payload = search_payload(fixture_index, "ozone", page_size=5)
        for item in payload["titles"]:
            assert item["title"] == fixture_index.titles[item["doc_id"]]

    def test_no_hits(self, fixture_index):
        payload = search_payload(fixture_index, "global seagrass ozone")
        assert payload["result_count"] == 0
        assert payload["titles"] == []

    def test_bad_page_size(self, fixture_index):
        with pytest.raises(ValueError, match="page_size"):
            search_payload(fixture_index, "ozone", page_size=-1)


class TestExports:
    def test_dot_nodes_and_edges(self, fixture_index):
        payload = build_graph(fixture_index, FIXTURE_QUERY, class_cfg=ClassConfig(b=-1.0))
        dot = to_dot(payload)
        assert dot.startswith("digraph")
        assert '"ozone" [label="ozone (19)"];' in dot
        assert '"ozone" -> "dioxide";' in dot
        assert dot.count(" -> ") == len(payload.edges)

    def test_text_lists_every_word(self, fixture_index):
        payload = build_graph(fixture_index, FIXTURE_QUERY)
        text = to_text(payload)
        for node in payload.nodes:
            assert node["word"] in text
        assert "results: 55" in text

    def test_text_on_empty_payload(self, fixture_index):
        payload = build_graph(fixture_index, "global seagrass ozone")
        assert "no topic words" in to_text(payload)

    def test_formats_agree_on_structure(self):
        rng = random.Random(666)
        for _ in range(10):
            docs = random_corpus(rng, min_docs=10, max_docs=40, max_vocab=40)
            index = build_index(docs)
            term = rng.choice(sorted(index.postings))
            payload = build_graph(index, term)
            dot = to_dot(payload)
            assert dot.count("[label=") == len(payload.nodes)
            assert dot.count(" -> ") == len(payload.edges)
