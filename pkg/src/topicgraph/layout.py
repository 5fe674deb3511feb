"""Mapping the topic word forest onto a 2-D canvas.

The vertical axis is truthful about frequency: y comes from an arctan
squash of log(df / df_m) and is never adjusted afterwards, so equal-df
words share a height and more frequent words always sit higher. The
horizontal axis only spreads nodes out: roots divide the canvas evenly,
children start centered under their parent, and a band-wise sweep then
enforces a minimum horizontal gap between nodes at similar heights.
Coordinates use a bottom-left origin (y grows upward with frequency).
"""

from __future__ import annotations

import logging
import math
from collections import deque
from dataclasses import dataclass
from typing import Sequence

from .extraction import TopicWord
from .links import LinkTable, tie_order_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LayoutConfig:
    """Canvas geometry and the y-axis squash constants.

    y uses c1 * atan(c2 * ln(df / df_m)); the logarithm base is fixed to
    natural since any other base only rescales c2. c1 defaults to
    height/pi so the squash range spans the canvas. band_height is the
    text-height threshold deciding which nodes count as horizontally
    adjacent; it defaults to height/40.
    """

    c1: float | None = None
    c2: float = 1.0
    width: float = 1000.0
    height: float = 600.0
    min_dx: float = 60.0
    band_height: float | None = None

    def __post_init__(self):
        if self.c1 is None:
            object.__setattr__(self, "c1", self.height / math.pi)
        if self.band_height is None:
            object.__setattr__(self, "band_height", self.height / 40)
        for name in ("c1", "c2", "width", "height", "min_dx", "band_height"):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError(f"{name} must be > 0, got {value}")


@dataclass(frozen=True)
class PlacedNode:
    word: str
    x: float
    y: float
    df: int


@dataclass(frozen=True)
class LayoutResult:
    """Placed nodes plus the horizontal separation actually guaranteed.

    effective_spacing is the smallest gap enforced in any band; it equals
    cfg.min_dx unless some band held more nodes than fit, in which case
    spacing was relaxed uniformly (relaxed=True) rather than dropping
    nodes.
    """

    nodes: tuple[PlacedNode, ...]
    effective_spacing: float
    relaxed: bool
    df_m: float


def middle_frequency(topic_words: Sequence[TopicWord]) -> float:
    """Median df; even counts take the geometric mean of the central pair,
    which keeps ln(df/df_m) antisymmetric around the middle."""
    if not topic_words:
        raise ValueError("middle_frequency of an empty selection")
    dfs = sorted(tw.df for tw in topic_words)
    mid = len(dfs) // 2
    if len(dfs) % 2:
        return float(dfs[mid])
    return math.sqrt(dfs[mid - 1] * dfs[mid])


def layout_y(df: float, df_m: float, cfg: LayoutConfig) -> float:
    """Raw vertical coordinate: c1 * atan(c2 * ln(df/df_m)).

    Strictly increasing in df and bounded by +-c1*pi/2.
    """
    return cfg.c1 * math.atan(cfg.c2 * math.log(df / df_m))


def canvas_y(df: float, df_m: float, cfg: LayoutConfig) -> float:
    """layout_y rescaled affinely from its (-c1*pi/2, c1*pi/2) range onto
    [0, height], preserving order."""
    half = cfg.c1 * math.pi / 2
    return (layout_y(df, df_m, cfg) + half) / (2 * half) * cfg.height


def _band_of(y: float, cfg: LayoutConfig) -> int:
    return int(y // cfg.band_height)


def layout_graph(
    topic_words: Sequence[TopicWord], links: LinkTable, cfg: LayoutConfig
) -> LayoutResult:
    """Place the forest on the canvas.

    x allocation recurses from the top-frequency node: roots evenly
    divide [0, width] in frequency order, each node's children start
    centered on it and spread symmetrically by min_dx, and a
    left-to-right sweep inside every y-band then restores the minimum
    gap. The sweep moves x only; y always stays the frequency mapping.
    Deterministic for identical inputs.
    """
    if not topic_words:
        return LayoutResult(nodes=(), effective_spacing=cfg.min_dx, relaxed=False, df_m=0.0)
    df_m = middle_frequency(topic_words)
    ys = {tw.word: canvas_y(tw.df, df_m, cfg) for tw in topic_words}

    ordered = sorted(topic_words, key=lambda tw: tie_order_key(tw.word, tw.df))
    children: dict[str, list[TopicWord]] = {}
    roots: list[TopicWord] = []
    for tw in ordered:
        parent = links.parent(tw.word)
        if parent is None:
            roots.append(tw)
        else:
            children.setdefault(parent, []).append(tw)

    xs: dict[str, float] = {}
    for i, root in enumerate(roots):
        xs[root.word] = cfg.width * (i + 1) / (len(roots) + 1)
    queue = deque(roots)
    while queue:
        node = queue.popleft()
        kids = children.get(node.word, [])
        spread = len(kids) - 1
        for j, kid in enumerate(kids):
            raw = xs[node.word] + (j - spread / 2) * cfg.min_dx
            xs[kid.word] = min(max(raw, 0.0), cfg.width)
            queue.append(kid)

    # Separation sweep, band by band.
    bands: dict[int, list[TopicWord]] = {}
    for tw in ordered:
        bands.setdefault(_band_of(ys[tw.word], cfg), []).append(tw)
    effective = cfg.min_dx
    relaxed = False
    for band_nodes in bands.values():
        count = len(band_nodes)
        if count < 2:
            continue
        spacing = cfg.min_dx
        if (count - 1) * spacing > cfg.width:
            spacing = cfg.width / (count - 1)
            relaxed = True
            logger.warning(
                "band with %d nodes cannot honour min_dx=%g on width %g; spacing relaxed to %g",
                count, cfg.min_dx, cfg.width, spacing,
            )
        effective = min(effective, spacing)
        band_nodes.sort(key=lambda tw: (xs[tw.word], tie_order_key(tw.word, tw.df)))
        for i in range(1, count):
            left, here = band_nodes[i - 1].word, band_nodes[i].word
            xs[here] = max(xs[here], xs[left] + spacing)
        last = band_nodes[-1].word
        xs[last] = min(xs[last], cfg.width)
        for i in range(count - 2, -1, -1):
            here, right = band_nodes[i].word, band_nodes[i + 1].word
            xs[here] = min(xs[here], xs[right] - spacing)
        # width - (count-1)*spacing is 0 in exact arithmetic when relaxed,
        # but float rounding can leave the leftmost a few ulps negative.
        for tw in band_nodes:
            xs[tw.word] = min(max(xs[tw.word], 0.0), cfg.width)

    placed = tuple(
        PlacedNode(word=tw.word, x=xs[tw.word], y=ys[tw.word], df=tw.df)
        for tw in topic_words
    )
    return LayoutResult(nodes=placed, effective_spacing=effective, relaxed=relaxed, df_m=df_m)
