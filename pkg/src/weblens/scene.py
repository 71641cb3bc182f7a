"""Scene assembly: one complete per-domain payload for the UI.

A scene composes the neighborhood graph, its layout, the reliability
summary, and the Twitter summary for one center domain under one fully
resolved option set. View switching is client-side, so every scene
carries all payloads; the label-source notice ships with every scene.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgument
from .layout import LayoutParams, LayoutResult, compute_layout
from .neighborhood import ALL_LABELS, Direction, NeighborhoodGraph, extract_neighborhood
from .store import DataStore, Domain, ReliabilityLabel, normalize_domain
from .summary import ReliabilitySummary, SummaryMode, build_summary
from .twitter import TwitterSummary, twitter_summary

_MAX_SEED = 2**64 - 1


@dataclass(frozen=True)
class SceneOptions:
    """Fully resolved query options; echoed verbatim in every scene."""

    direction: Direction = Direction.INBOUND
    max_hops: int = 2
    labels: frozenset[ReliabilityLabel] = ALL_LABELS
    mode: SummaryMode = SummaryMode.NORMALIZED
    seed: int = 0
    bot_threshold: float = 0.5
    per_hop_cap: int = 100


@dataclass(frozen=True)
class SceneDocument:
    center: Domain
    center_label: ReliabilityLabel
    graph: NeighborhoodGraph
    layout: LayoutResult
    summary: ReliabilitySummary
    twitter: TwitterSummary
    label_sources_notice: tuple[str, ...]
    options_echo: SceneOptions


def resolve_options(
    *,
    direction: str | None = None,
    hops: int | str | None = None,
    labels: str | None = None,
    mode: str | None = None,
    seed: int | str | None = None,
    default_seed: int = 0,
    bot_threshold: float = 0.5,
    per_hop_cap: int = 100,
) -> SceneOptions:
    """Parse raw option strings into a SceneOptions, filling defaults.

    Defaults mirror the tool's out-of-the-box view: inbound direction,
    both rings, all labels, normalized mode. Unknown values raise
    InvalidArgument.
    """
    try:
        parsed_direction = Direction(direction) if direction is not None else Direction.INBOUND
    except ValueError:
        raise InvalidArgument(f"direction must be one of 'in', 'both', got {direction!r}") from None

    if hops is None:
        parsed_hops = 2
    else:
        try:
            parsed_hops = int(hops)
        except (TypeError, ValueError):
            raise InvalidArgument(f"hops must be 1 or 2, got {hops!r}") from None
    if parsed_hops not in (1, 2):
        raise InvalidArgument(f"hops must be 1 or 2, got {parsed_hops}")

    if labels is None:
        parsed_labels = ALL_LABELS
    else:
        names = [part.strip() for part in labels.split(",") if part.strip()]
        if not names:
            raise InvalidArgument("labels must name at least one reliability label")
        try:
            parsed_labels = frozenset(ReliabilityLabel(name.lower()) for name in names)
        except ValueError:
            raise InvalidArgument(f"unknown reliability label in {labels!r}") from None

    try:
        parsed_mode = SummaryMode(mode) if mode is not None else SummaryMode.NORMALIZED
    except ValueError:
        raise InvalidArgument(f"mode must be 'normalized' or 'absolute', got {mode!r}") from None

    if seed is None:
        parsed_seed = default_seed
    else:
        try:
            parsed_seed = int(seed)
        except (TypeError, ValueError):
            raise InvalidArgument(f"seed must be an unsigned 64-bit integer, got {seed!r}") from None
    if not 0 <= parsed_seed <= _MAX_SEED:
        raise InvalidArgument(f"seed must be an unsigned 64-bit integer, got {parsed_seed}")

    return SceneOptions(
        direction=parsed_direction,
        max_hops=parsed_hops,
        labels=parsed_labels,
        mode=parsed_mode,
        seed=parsed_seed,
        bot_threshold=bot_threshold,
        per_hop_cap=per_hop_cap,
    )


def get_scene(store: DataStore, center_raw: str, options: SceneOptions | None = None) -> SceneDocument:
    """Build the complete scene for a visited domain.

    The center is normalized here, so callers may pass URL-ish strings.
    Unknown domains are not an error: the tool's premise is being shown
    for any visited site, so they yield an empty scene.
    """
    if options is None:
        options = SceneOptions()
    center = normalize_domain(center_raw)

    graph = extract_neighborhood(
        store,
        center,
        direction=options.direction,
        max_hops=options.max_hops,
        label_filter=options.labels,
        per_hop_cap=options.per_hop_cap,
    )
    layout = compute_layout(graph, LayoutParams(seed=options.seed))
    summary = build_summary(graph, options.mode)
    twitter = twitter_summary(store, center, options.bot_threshold)

    sources = set(store.all_sources())
    sources.update(store.lookup_sources(center))
    for node in graph.nodes:
        sources.update(store.lookup_sources(node.domain))

    return SceneDocument(
        center=center,
        center_label=graph.center_label,
        graph=graph,
        layout=layout,
        summary=summary,
        twitter=twitter,
        label_sources_notice=tuple(sorted(sources)),
        options_echo=options,
    )
