"""Query evaluation and the per-query statistics downstream steps consume.

A query retrieves the documents containing every term (conjunctive
match). The retrieved set carries df (subset document frequency) for
every word appearing in at least one retrieved document, and M, the
maximum such df. Both are pure functions of the index and the query.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import cached_property
from itertools import chain

from .corpus import CorpusIndex


class EmptyQueryError(ValueError):
    """Query text yields no indexable terms after tokenization."""


@dataclass(frozen=True)
class Query:
    terms: tuple[str, ...]

    def __post_init__(self):
        if not self.terms:
            raise EmptyQueryError("query must contain at least one term")

    @classmethod
    def from_text(cls, text: str, index: CorpusIndex) -> "Query":
        """Tokenize query text with the index's own tokenizer. Repeated
        terms collapse to the first occurrence."""
        terms = tuple(dict.fromkeys(index.tokenizer.tokenize(text)))
        if not terms:
            raise EmptyQueryError(f"no indexable terms in query {text!r}")
        return cls(terms)


@dataclass(frozen=True)
class RetrievedSet:
    """Documents matching one query plus the statistics computed over them.

    An empty result (no document matches every term) is represented by
    size 0, M 0 and empty maps; the instance is falsy, and still carries
    the query so callers can report "no documents" for it.
    """

    query: Query
    doc_ids: tuple[int, ...]
    df_subset: dict[str, int]
    M: int
    size: int

    def __bool__(self) -> bool:
        return self.size > 0

    @cached_property
    def doc_id_set(self) -> frozenset[int]:
        return frozenset(self.doc_ids)


def _intersect_sorted(a: list[int] | tuple[int, ...], b: list[int]) -> list[int]:
    # Classic two-pointer merge over ascending posting lists.
    out = []
    i = j = 0
    len_a, len_b = len(a), len(b)
    while i < len_a and j < len_b:
        if a[i] == b[j]:
            out.append(a[i])
            i += 1
            j += 1
        elif a[i] < b[j]:
            i += 1
        else:
            j += 1
    return out


def execute_query(index: CorpusIndex, query: Query) -> RetrievedSet:
    """Intersect the posting lists of all query terms (AND semantics).

    df_subset is materialized for every word occurring in the retrieved
    documents, because class thresholds range over all of them. A term
    absent from the index, or a dry intersection, yields the empty
    RetrievedSet signal.
    """
    empty = RetrievedSet(query=query, doc_ids=(), df_subset={}, M=0, size=0)
    lists = []
    for term in dict.fromkeys(query.terms):
        plist = index.postings.get(term)
        if plist is None:
            return empty
        lists.append(plist)
    lists.sort(key=len)
    result = lists[0]
    for other in lists[1:]:
        result = _intersect_sorted(result, other)
        if not result:
            return empty
    # Single C-level pass; a per-document update loop is 2-3x slower on
    # retrievals spanning most of a large corpus.
    df = Counter(chain.from_iterable(map(index.doc_words.__getitem__, result)))
    return RetrievedSet(
        query=query,
        doc_ids=tuple(result),
        df_subset=dict(df),
        M=max(df.values()),
        size=len(result),
    )


def cooccurrence_freq(rs: RetrievedSet, index: CorpusIndex, x: str, y: str) -> int:
    """Number of retrieved documents containing both x and y.

    Symmetric in x and y; 0 when the words never share a retrieved
    document.
    """
    if x == y:
        raise ValueError(f"co-occurrence needs two distinct words, got {x!r} twice")
    with_x = rs.doc_id_set.intersection(index.postings.get(x, ()))
    return len(with_x.intersection(index.postings.get(y, ())))
