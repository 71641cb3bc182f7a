"""Reliability summary: ring label distributions, doughnut arcs, and the alert statement.

The doughnut has an inner ring (1-hop) and an outer ring (2-hop). In
normalized mode a full ring is 100% of that ring's sites; in absolute
mode each site occupies one fixed 3.6-degree segment (100 per ring).
Requesting absolute with more than 100 sites in either ring falls back
to normalized, flagged so the UI can explain why.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidArgument
from .neighborhood import NeighborhoodGraph
from .store import ReliabilityLabel

SEGMENT_DEGREES = 3.6  # one site in absolute mode; 100 segments per ring
ABSOLUTE_RING_LIMIT = 100

# Arc order within a ring is fixed for visual stability across queries.
LABEL_ORDER = (
    ReliabilityLabel.CONTROVERSIAL,
    ReliabilityLabel.VERIFIED,
    ReliabilityLabel.UNLABELED,
)


class SummaryMode(str, Enum):
    NORMALIZED = "normalized"
    ABSOLUTE = "absolute"


class Ring(str, Enum):
    INNER = "inner"
    OUTER = "outer"


@dataclass(frozen=True)
class LabelCounts:
    controversial: int = 0
    verified: int = 0
    unlabeled: int = 0

    @property
    def total(self) -> int:
        return self.controversial + self.verified + self.unlabeled

    def count(self, label: ReliabilityLabel) -> int:
        return getattr(self, label.value)


@dataclass(frozen=True)
class Arc:
    ring: Ring
    label: ReliabilityLabel
    start_angle: float  # degrees in [0, 360)
    sweep: float  # degrees in (0, 360]
    count: int
    percent_of_ring: float


@dataclass(frozen=True)
class ReliabilitySummary:
    mode_requested: SummaryMode
    mode_effective: SummaryMode
    fallback: bool
    ring1: LabelCounts
    ring2: LabelCounts
    arcs: tuple[Arc, ...]
    center_percent_controversial: float
    statement: str


def ring_distribution(graph: NeighborhoodGraph, hop: int) -> LabelCounts:
    """Label counts of the graph's nodes at exactly ``hop``."""
    if hop not in (1, 2):
        raise InvalidArgument(f"hop must be 1 or 2, got {hop}")
    if hop > graph.max_hops:
        raise InvalidArgument(f"hop {hop} exceeds graph max_hops {graph.max_hops}")
    counts = {label: 0 for label in ReliabilityLabel}
    for node in graph.nodes:
        if node.hop == hop:
            counts[node.label] += 1
    return LabelCounts(
        controversial=counts[ReliabilityLabel.CONTROVERSIAL],
        verified=counts[ReliabilityLabel.VERIFIED],
        unlabeled=counts[ReliabilityLabel.UNLABELED],
    )


def format_statement(controversial_linkers: int) -> str:
    """The alert sentence for n controversial sites linking in directly."""
    if controversial_linkers == 0:
        return "No controversial websites are linking to the site you are visiting"
    if controversial_linkers == 1:
        return "1 controversial website is linking to the site you are visiting"
    return f"{controversial_linkers} controversial websites are linking to the site you are visiting"


def _ring_arcs(ring: Ring, counts: LabelCounts, mode: SummaryMode) -> list[Arc]:
    if counts.total == 0:
        return []
    arcs: list[Arc] = []
    start = 0.0
    for label in LABEL_ORDER:
        count = counts.count(label)
        if count == 0:
            continue
        if mode is SummaryMode.NORMALIZED:
            sweep = 360.0 * count / counts.total
        else:
            sweep = SEGMENT_DEGREES * count
        arcs.append(
            Arc(
                ring=ring,
                label=label,
                start_angle=start,
                sweep=sweep,
                count=count,
                percent_of_ring=100.0 * count / counts.total,
            )
        )
        start += sweep
    return arcs


def build_summary(graph: NeighborhoodGraph, mode: SummaryMode = SummaryMode.NORMALIZED) -> ReliabilitySummary:
    """Build the complete summary payload for a neighborhood graph.

    The statement count comes from the graph's unfiltered inbound 1-hop
    controversial count, not from the displayed (filtered) rings; the
    center percentage and arcs cover exactly what is displayed.
    """
    ring1 = ring_distribution(graph, 1)
    ring2 = ring_distribution(graph, 2) if graph.max_hops >= 2 else LabelCounts()

    fallback = mode is SummaryMode.ABSOLUTE and (
        ring1.total > ABSOLUTE_RING_LIMIT or ring2.total > ABSOLUTE_RING_LIMIT
    )
    effective = SummaryMode.NORMALIZED if fallback else mode

    arcs = tuple(_ring_arcs(Ring.INNER, ring1, effective) + _ring_arcs(Ring.OUTER, ring2, effective))

    displayed = ring1.total + ring2.total
    controversial = ring1.controversial + ring2.controversial
    center_percent = 100.0 * controversial / displayed if displayed else 0.0

    return ReliabilitySummary(
        mode_requested=mode,
        mode_effective=effective,
        fallback=fallback,
        ring1=ring1,
        ring2=ring2,
        arcs=arcs,
        center_percent_controversial=center_percent,
        statement=format_statement(graph.inbound_controversial_count),
    )
