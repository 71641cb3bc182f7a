"""Hop-annotated neighborhood extraction around a visited domain.

Traversal is breadth-first over the unfiltered hyperlink graph so each
neighbor gets its minimum hop; label filtering happens afterwards and
prunes 2-hop nodes whose only connection ran through a removed 1-hop
node. Ring populations are capped deterministically (lexicographic) so
the graph and the doughnut describe the same node set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import InvalidArgument
from .store import DataStore, Domain, ReliabilityLabel

ALL_LABELS = frozenset(ReliabilityLabel)


class Direction(str, Enum):
    """Traversal direction: sites linking TO the visited site, optionally plus
    the sites it links to. Outbound-only is deliberately not expressible."""

    INBOUND = "in"
    BOTH = "both"


@dataclass(frozen=True)
class NeighborNode:
    domain: Domain
    hop: int
    label: ReliabilityLabel


@dataclass(frozen=True)
class NeighborhoodGraph:
    """Center domain plus its filtered, capped 1- and 2-hop neighbors.

    Edges keep true hyperlink orientation (src links to dst) regardless of
    traversal direction, and both endpoints of every edge are the center or
    a listed node. ``inbound_controversial_count`` is the controversial
    count over the *unfiltered* inbound 1-hop set; the summary statement is
    built from it so presentation filters can never hide the alert.
    """

    center: Domain
    center_label: ReliabilityLabel
    nodes: tuple[NeighborNode, ...]
    edges: tuple[tuple[Domain, Domain], ...]
    direction: Direction
    label_filter: frozenset[ReliabilityLabel]
    max_hops: int
    truncated: bool
    inbound_controversial_count: int

    def nodes_at(self, hop: int) -> list[NeighborNode]:
        return [n for n in self.nodes if n.hop == hop]

    def domains(self) -> set[Domain]:
        return {n.domain for n in self.nodes}


def _neighbors(store: DataStore, domain: Domain, direction: Direction) -> frozenset[Domain]:
    if direction is Direction.INBOUND:
        return store.incoming(domain)
    return store.incoming(domain) | store.outgoing(domain)


def extract_neighborhood(
    store: DataStore,
    center: Domain,
    direction: Direction = Direction.INBOUND,
    max_hops: int = 2,
    label_filter: frozenset[ReliabilityLabel] = ALL_LABELS,
    per_hop_cap: int = 100,
) -> NeighborhoodGraph:
    """Extract the hop-annotated neighborhood of ``center``.

    An unknown or edge-less center is not an error; it yields an empty
    graph. Raises InvalidArgument for out-of-range options.
    """
    if max_hops not in (1, 2):
        raise InvalidArgument(f"max_hops must be 1 or 2, got {max_hops}")
    if per_hop_cap < 1:
        raise InvalidArgument(f"per_hop_cap must be >= 1, got {per_hop_cap}")
    if not label_filter:
        raise InvalidArgument("label_filter must be non-empty")
    label_filter = frozenset(label_filter)

    # BFS levels on the unfiltered graph give minimum hops.
    hop1 = set(_neighbors(store, center, direction))
    hop1.discard(center)
    hop2: set[Domain] = set()
    if max_hops >= 2:
        for node in hop1:
            hop2 |= _neighbors(store, node, direction)
        hop2 -= hop1
        hop2.discard(center)

    # Filter after hop assignment, then drop 2-hop nodes that lost every
    # path when their 1-hop connectors were filtered out.
    hop1_kept = {d for d in hop1 if store.lookup_label(d) in label_filter}
    hop2_kept: set[Domain] = set()
    if max_hops >= 2:
        reachable: set[Domain] = set()
        for node in hop1_kept:
            reachable |= _neighbors(store, node, direction)
        hop2_kept = {d for d in hop2 & reachable if store.lookup_label(d) in label_filter}

    truncated = False
    hop1_final = sorted(hop1_kept)
    hop2_final = sorted(hop2_kept)
    if len(hop1_final) > per_hop_cap:
        hop1_final = hop1_final[:per_hop_cap]
        truncated = True
    if len(hop2_final) > per_hop_cap:
        hop2_final = hop2_final[:per_hop_cap]
        truncated = True

    nodes = tuple(
        NeighborNode(domain=d, hop=hop, label=store.lookup_label(d))
        for hop, bucket in ((1, hop1_final), (2, hop2_final))
        for d in bucket
    )

    visible = {center} | {n.domain for n in nodes}
    edges = sorted(
        (src, dst)
        for src in visible
        for dst in store.outgoing(src)
        if dst in visible
    )

    inbound_controversial = sum(
        1
        for d in store.incoming(center)
        if d != center and store.lookup_label(d) is ReliabilityLabel.CONTROVERSIAL
    )

    return NeighborhoodGraph(
        center=center,
        center_label=store.lookup_label(center),
        nodes=nodes,
        edges=tuple(edges),
        direction=direction,
        label_filter=label_filter,
        max_hops=max_hops,
        truncated=truncated,
        inbound_controversial_count=inbound_controversial,
    )
