"""Conjunctive retrieval against brute-force scans of the raw corpus."""

import random

import pytest

from corpora import (
    brute_cooccurrence,
    brute_df_subset,
    brute_retrieve,
    random_corpus,
)
from topicgraph.corpus import Document, build_index
from topicgraph.retrieval import (
    EmptyQueryError,
    Query,
    cooccurrence_freq,
    execute_query,
)


def small_index():
    docs = [
        Document(doc_id=0, title="tt", body="apple banana"),
        Document(doc_id=1, title="tt", body="apple cherry"),
        Document(doc_id=2, title="tt", body="banana cherry apple"),
        Document(doc_id=3, title="tt", body="date"),
    ]
    return build_index(docs)


class TestQuery:
    def test_from_text_tokenizes_and_dedupes_keeping_order(self):
        index = small_index()
        q = Query.from_text("Cherry the APPLE cherry", index)
        assert q.terms == ("cherry", "apple")

    def test_empty_text_rejected(self):
        index = small_index()
        with pytest.raises(EmptyQueryError):
            Query.from_text("", index)

    def test_stopword_only_text_rejected(self):
        index = small_index()
        with pytest.raises(EmptyQueryError):
            Query.from_text("the of and", index)

    def test_no_terms_rejected(self):
        with pytest.raises(EmptyQueryError):
            Query(terms=())


class TestExecuteQuery:
    def test_single_term(self):
        index = small_index()
        rs = execute_query(index, Query(terms=("apple",)))
        assert rs.doc_ids == (0, 1, 2)
        assert rs.size == 3
        assert bool(rs)

    def test_conjunction(self):
        index = small_index()
        rs = execute_query(index, Query(terms=("apple", "cherry")))
        assert rs.doc_ids == (1, 2)

    def test_unknown_term_gives_empty_set(self):
        index = small_index()
        rs = execute_query(index, Query(terms=("apple", "zzz")))
        assert rs.doc_ids == ()
        assert rs.size == 0
        assert not rs
        assert rs.M == 0
        assert rs.df_subset == {}

    def test_df_subset_and_m(self):
        index = small_index()
        rs = execute_query(index, Query(terms=("apple",)))
        assert rs.df_subset["apple"] == 3
        assert rs.df_subset["banana"] == 2
        assert rs.df_subset["cherry"] == 2
        assert "date" not in rs.df_subset
        assert rs.M == 3

    def test_matches_brute_force_on_random_corpora(self):
        rng = random.Random(202)
        for _ in range(60):
            docs = random_corpus(rng, min_docs=10, max_docs=60, max_vocab=80)
            index = build_index(docs)
            vocab = sorted(index.postings)
            terms = rng.sample(vocab, k=min(len(vocab), rng.randint(1, 3)))
            rs = execute_query(index, Query(terms=tuple(terms)))
            expected_ids = brute_retrieve(docs, terms, index.tokenizer)
            assert list(rs.doc_ids) == expected_ids
            assert rs.df_subset == brute_df_subset(docs, expected_ids, index.tokenizer)
            if rs:
                assert rs.M == max(rs.df_subset.values())
                # Query terms appear in every retrieved document.
                for term in terms:
                    assert rs.df_subset[term] == rs.size

    def test_doc_ids_always_sorted(self):
        docs = [Document(doc_id=i, title="tt", body="shared") for i in (50, 3, 20, 1)]
        rs = execute_query(build_index(docs), Query(terms=("shared",)))
        assert rs.doc_ids == (1, 3, 20, 50)


class TestCooccurrenceFreq:
    def test_counts_docs_containing_both(self):
        index = small_index()
        rs = execute_query(index, Query(terms=("apple",)))
        assert cooccurrence_freq(rs, index, "banana", "cherry") == 1
        assert cooccurrence_freq(rs, index, "apple", "banana") == 2

    def test_restricted_to_retrieved_set(self):
        docs = [
            Document(doc_id=0, title="tt", body="query alpha beta"),
            Document(doc_id=1, title="tt", body="alpha beta"),
        ]
        index = build_index(docs)
        rs = execute_query(index, Query(terms=("query",)))
        assert cooccurrence_freq(rs, index, "alpha", "beta") == 1

    def test_same_word_rejected(self):
        index = small_index()
        rs = execute_query(index, Query(terms=("apple",)))
        with pytest.raises(ValueError):
            cooccurrence_freq(rs, index, "apple", "apple")

    def test_matches_brute_force(self):
        rng = random.Random(303)
        for _ in range(30):
            docs = random_corpus(rng, min_docs=10, max_docs=50, max_vocab=40)
            index = build_index(docs)
            vocab = sorted(index.postings)
            term = rng.choice(vocab)
            rs = execute_query(index, Query(terms=(term,)))
            if not rs:
                continue
            ids = list(rs.doc_ids)
            for _ in range(10):
                x, y = rng.sample(vocab, k=2)
                expected = brute_cooccurrence(docs, ids, x, y, index.tokenizer)
                assert cooccurrence_freq(rs, index, x, y) == expected
