"""Linking each topic word to its best higher-frequency companion.

Every topic word X gets at most one parent: the topic word Y with
higher subset frequency (ties broken by word order) whose co-occurrence
strength f_xy / df(Y) is maximal. Frequencies strictly decrease along
child-to-parent chains, so the result is always a forest.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .corpus import CorpusIndex
from .extraction import TopicWord
from .retrieval import RetrievedSet


@dataclass(frozen=True)
class LinkTable:
    """Child word -> parent word, with the winning strength per child.

    Words absent from links are roots: either nothing ranks above them,
    or nothing above them co-occurs with them at all.
    """

    links: dict[str, str]
    strengths: dict[str, float]

    def parent(self, word: str) -> str | None:
        return self.links.get(word)

    def roots(self, words: Iterable[str]) -> list[str]:
        return [w for w in words if w not in self.links]


def cooccur_strength(f_xy: int, f_y: int) -> float:
    """Share of Y's retrieved documents that also contain X."""
    if f_y < 1:
        raise ValueError(f"f_y must be >= 1, got {f_y}")
    if not 0 <= f_xy <= f_y:
        raise ValueError(f"need 0 <= f_xy <= f_y, got f_xy={f_xy}, f_y={f_y}")
    return f_xy / f_y


def tie_order_key(word: str, df: int) -> tuple[int, str]:
    """Global order defining "higher frequency": df descending, word ascending."""
    return (-df, word)


def choose_parent(
    x: TopicWord, candidates: Sequence[tuple[TopicWord, float]]
) -> TopicWord | None:
    """Candidate with maximal strength; strength ties prefer the larger df
    (more general hub), then the alphabetically first word. None when the
    candidate set is empty or nothing co-occurs with x."""
    positive = [(cand, strength) for cand, strength in candidates if strength > 0]
    if not positive:
        return None
    best, _ = min(positive, key=lambda cs: (-cs[1], -cs[0].df, cs[0].word))
    return best


def build_links(
    topic_words: Sequence[TopicWord], rs: RetrievedSet, index: CorpusIndex
) -> LinkTable:
    """Choose a parent for every topic word among the words ranked above it."""
    doc_set = rs.doc_id_set
    restricted = {
        tw.word: doc_set.intersection(index.postings.get(tw.word, ()))
        for tw in topic_words
    }
    ordered = sorted(topic_words, key=lambda tw: tie_order_key(tw.word, tw.df))
    links: dict[str, str] = {}
    strengths: dict[str, float] = {}
    for i, x in enumerate(ordered):
        docs_x = restricted[x.word]
        candidates = [
            (y, cooccur_strength(len(docs_x & restricted[y.word]), y.df))
            for y in ordered[:i]
        ]
        parent = choose_parent(x, candidates)
        if parent is not None:
            links[x.word] = parent.word
            strengths[x.word] = dict((y.word, s) for y, s in candidates)[parent.word]
    return LinkTable(links=links, strengths=strengths)
