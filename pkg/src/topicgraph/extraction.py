"""Topic word selection.

Importance is relative frequency df/DF: how exclusively a word belongs
to the retrieved set. Plain selection ranks by that alone. Classed
selection first partitions the df range into geometric frequency bands
and draws a tunable number of words from each band, which keeps common
and specific topic words in balance instead of letting rare noise words
(df=1, DF=1, ratio 1.0) crowd out the frequent ones.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction

from .corpus import CorpusIndex
from .retrieval import RetrievedSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ClassConfig:
    """Parameters of classed topic extraction.

    n: total number of topic words to extract.
    c: number of frequency classes.
    l: lower frequency boundary in (0, 1]; words with df below l*M drop
       out of candidacy entirely.
    b: balance in [-1, 1]; negative shifts quota toward common words
       (low class numbers), positive toward specific words.
    """

    n: int = 15
    c: int = 3
    l: float = 1 / 32
    b: float = 0.0

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be >= 1, got {self.n}")
        if self.c < 1:
            raise ValueError(f"c must be >= 1, got {self.c}")
        if not 0 < self.l <= 1:
            raise ValueError(f"l must be in (0, 1], got {self.l}")
        if not -1 <= self.b <= 1:
            raise ValueError(f"b must be in [-1, 1], got {self.b}")


@dataclass(frozen=True)
class ClassPartition:
    """Geometric df bands below the subset maximum M.

    bounds[k-1] is the half-open interval [M * r**k, M * r**(k-1)) of
    class k, for k = 1..c, with shared edges so the bands tile exactly.
    Class numbers grow toward lower frequencies; df below the last lower
    bound (max(l*M, 1)) is excluded from candidacy.
    """

    M: int
    r: float
    bounds: tuple[tuple[float, float], ...]

    @property
    def lower_limit(self) -> float:
        return self.bounds[-1][0]


@dataclass(frozen=True)
class TopicWord:
    """A selected topic word. class_idx is 1..c for classed selection and
    0 when classes were not used."""

    word: str
    df: int
    df_global: int
    rel_freq: float
    class_idx: int


def relative_frequency(df: int, df_global: int) -> float:
    """df / DF, the share of the word's documents that were retrieved."""
    if df < 1 or df > df_global:
        raise ValueError(f"need 1 <= df <= DF, got df={df}, DF={df_global}")
    return df / df_global


def class_partition(M: int, cfg: ClassConfig) -> ClassPartition | None:
    """Build the frequency bands for maximum subset frequency M.

    r = max(l, 1/M) ** (1/c), so c bands span [max(l*M, 1), M). Returns
    None for M == 0 (empty retrieval has no partition).
    """
    if M < 0:
        raise ValueError(f"M must be non-negative, got {M}")
    if M == 0:
        return None
    r = max(cfg.l, 1 / M) ** (1 / cfg.c)
    edges = [M * r**k for k in range(cfg.c + 1)]
    # M * r**c equals max(l*M, 1) in real arithmetic but drifts by a few
    # ulps in floats, which would wrongly exclude df=1; pin it exactly.
    edges[0] = float(M)
    edges[cfg.c] = max(cfg.l * M, 1.0)
    bounds = tuple((edges[k], edges[k - 1]) for k in range(1, cfg.c + 1))
    return ClassPartition(M=M, r=r, bounds=bounds)


def classify(df: int, partition: ClassPartition) -> int | None:
    """Class index of a word with subset frequency df, or None if excluded.

    df == M always lands in class 1 (the top band is otherwise open at
    M); df below the lowest bound is excluded.
    """
    if df < 1:
        raise ValueError(f"df must be >= 1, got {df}")
    if df > partition.M:
        raise ValueError(f"df {df} exceeds partition maximum {partition.M}")
    if df == partition.M:
        return 1
    for k, (low, high) in enumerate(partition.bounds, start=1):
        if low <= df < high:
            return k
    return None


def allotment_caps(cfg: ClassConfig) -> tuple[int, ...]:
    """Cumulative topic word caps: caps[k-1] limits classes 1..k together.

    cap(k) = floor(n * (b*(k/c)^2 + (1-b)*(k/c))), evaluated in exact
    rational arithmetic so cap(c) == n holds exactly for every float b.
    The caps being cumulative is what lets an underfull class donate its
    slack to the classes after it.
    """
    b = Fraction(cfg.b)
    caps = []
    for k in range(1, cfg.c + 1):
        share = Fraction(k, cfg.c)
        caps.append(math.floor(cfg.n * (b * share * share + (1 - b) * share)))
    return tuple(caps)


def _rank_key(item: tuple[str, int, float]) -> tuple[float, int, str]:
    # rel_freq descending, then df descending, then word ascending.
    word, df, rel = item
    return (-rel, -df, word)


def select_topic_words_plain(rs: RetrievedSet, index: CorpusIndex, n: int) -> list[TopicWord]:
    """Top-n words of the retrieved set by relative frequency alone."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not rs:
        logger.warning("empty retrieval for query %s: no topic words", list(rs.query.terms))
        return []
    scored = [
        (word, df, relative_frequency(df, index.df_global[word]))
        for word, df in rs.df_subset.items()
    ]
    scored.sort(key=_rank_key)
    return [
        TopicWord(word=word, df=df, df_global=index.df_global[word], rel_freq=rel, class_idx=0)
        for word, df, rel in scored[:n]
    ]


def select_topic_words_classed(rs: RetrievedSet, index: CorpusIndex, cfg: ClassConfig) -> list[TopicWord]:
    """Greedy selection by ascending class index under cumulative caps.

    Classes are visited from 1 (most frequent) to c; inside a class,
    candidates are ranked by relative frequency (ties: df, then word).
    Words are taken while the running total stays below the class's
    cumulative cap, so a class without enough candidates automatically
    hands its remaining quota to the next one.
    """
    if not rs:
        logger.warning("empty retrieval for query %s: no topic words", list(rs.query.terms))
        return []
    partition = class_partition(rs.M, cfg)
    assert partition is not None  # rs non-empty implies M >= 1
    caps = allotment_caps(cfg)
    per_class: list[list[tuple[str, int, float]]] = [[] for _ in range(cfg.c)]
    for word, df in rs.df_subset.items():
        k = classify(df, partition)
        if k is not None:
            per_class[k - 1].append((word, df, relative_frequency(df, index.df_global[word])))
    selected: list[TopicWord] = []
    for k in range(cfg.c):
        per_class[k].sort(key=_rank_key)
        cap = caps[k]
        for word, df, rel in per_class[k]:
            if len(selected) >= cap:
                break
            selected.append(
                TopicWord(word=word, df=df, df_global=index.df_global[word], rel_freq=rel, class_idx=k + 1)
            )
    return selected
