"""Pydantic wire models for scene documents and health responses.

Field names are lower_snake_case and all angles are degrees on the wire;
the layout engine works in radians internally. Containers are emitted in
deterministic order so identical queries serialize byte-identically.
"""

from __future__ import annotations

import math

from pydantic import BaseModel

from .layout import EdgeGeometry, LayoutResult, NodePosition
from .neighborhood import NeighborhoodGraph, NeighborNode
from .scene import SceneDocument, SceneOptions
from .store import ReliabilityLabel
from .summary import Arc, LabelCounts, ReliabilitySummary
from .twitter import TwitterSummary

_LABEL_ORDER = [label.value for label in ReliabilityLabel]


class LabelCountsModel(BaseModel):
    controversial: int
    verified: int
    unlabeled: int
    total: int


class NeighborNodeModel(BaseModel):
    domain: str
    hop: int
    label: str


class GraphEdgeModel(BaseModel):
    src: str
    dst: str


class GraphModel(BaseModel):
    center: str
    center_label: str
    nodes: list[NeighborNodeModel]
    edges: list[GraphEdgeModel]
    direction: str
    label_filter: list[str]
    max_hops: int
    truncated: bool
    inbound_controversial_count: int


class NodePositionModel(BaseModel):
    domain: str
    radius: float
    angle_degrees: float


class EdgeGeometryModel(BaseModel):
    src: str
    dst: str
    kind: str
    control_point: tuple[float, float] | None
    animate_by_default: bool


class LayoutParamsModel(BaseModel):
    r1: float
    r2: float
    iterations: int
    repulsion_k: float
    attraction_k: float
    cooling: float
    seed: int


class LayoutModel(BaseModel):
    positions: list[NodePositionModel]
    edges: list[EdgeGeometryModel]
    params: LayoutParamsModel


class ArcModel(BaseModel):
    ring: str
    label: str
    start_angle: float
    sweep: float
    count: int
    percent_of_ring: float


class SummaryModel(BaseModel):
    mode_requested: str
    mode_effective: str
    fallback: bool
    ring1: LabelCountsModel
    ring2: LabelCountsModel
    arcs: list[ArcModel]
    center_percent_controversial: float
    statement: str


class TwitterModel(BaseModel):
    domain: str
    mentioning_accounts: int
    bot_accounts: int
    bot_threshold: float
    coshared: LabelCountsModel
    percent_controversial_coshared: float


class OptionsModel(BaseModel):
    direction: str
    hops: int
    labels: list[str]
    mode: str
    seed: int
    bot_threshold: float
    per_hop_cap: int


class SceneModel(BaseModel):
    center: str
    center_label: str
    graph: GraphModel
    layout: LayoutModel
    summary: SummaryModel
    twitter: TwitterModel
    label_sources_notice: list[str]
    options_echo: OptionsModel


class HealthModel(BaseModel):
    status: str
    sites: int
    edges: int


def _label_counts_model(counts: LabelCounts) -> LabelCountsModel:
    return LabelCountsModel(
        controversial=counts.controversial,
        verified=counts.verified,
        unlabeled=counts.unlabeled,
        total=counts.total,
    )


def _node_model(node: NeighborNode) -> NeighborNodeModel:
    return NeighborNodeModel(domain=node.domain, hop=node.hop, label=node.label.value)


def _graph_model(graph: NeighborhoodGraph) -> GraphModel:
    return GraphModel(
        center=graph.center,
        center_label=graph.center_label.value,
        nodes=[_node_model(n) for n in graph.nodes],
        edges=[GraphEdgeModel(src=s, dst=d) for s, d in graph.edges],
        direction=graph.direction.value,
        label_filter=[v for v in _LABEL_ORDER if ReliabilityLabel(v) in graph.label_filter],
        max_hops=graph.max_hops,
        truncated=graph.truncated,
        inbound_controversial_count=graph.inbound_controversial_count,
    )


def _position_model(position: NodePosition) -> NodePositionModel:
    return NodePositionModel(
        domain=position.domain,
        radius=position.radius,
        angle_degrees=math.degrees(position.angle),
    )


def _edge_geometry_model(edge: EdgeGeometry) -> EdgeGeometryModel:
    return EdgeGeometryModel(
        src=edge.src,
        dst=edge.dst,
        kind=edge.kind.value,
        control_point=edge.control_point,
        animate_by_default=edge.animate_by_default,
    )


def _layout_model(layout: LayoutResult) -> LayoutModel:
    params = layout.params
    return LayoutModel(
        positions=[_position_model(p) for p in layout.positions],
        edges=[_edge_geometry_model(e) for e in layout.edges],
        params=LayoutParamsModel(
            r1=params.r1,
            r2=params.r2,
            iterations=params.iterations,
            repulsion_k=params.repulsion_k,
            attraction_k=params.attraction_k,
            cooling=params.cooling,
            seed=params.seed,
        ),
    )


def _arc_model(arc: Arc) -> ArcModel:
    return ArcModel(
        ring=arc.ring.value,
        label=arc.label.value,
        start_angle=arc.start_angle,
        sweep=arc.sweep,
        count=arc.count,
        percent_of_ring=arc.percent_of_ring,
    )


def _summary_model(summary: ReliabilitySummary) -> SummaryModel:
    return SummaryModel(
        mode_requested=summary.mode_requested.value,
        mode_effective=summary.mode_effective.value,
        fallback=summary.fallback,
        ring1=_label_counts_model(summary.ring1),
        ring2=_label_counts_model(summary.ring2),
        arcs=[_arc_model(a) for a in summary.arcs],
        center_percent_controversial=summary.center_percent_controversial,
        statement=summary.statement,
    )


def _twitter_model(summary: TwitterSummary) -> TwitterModel:
    return TwitterModel(
        domain=summary.domain,
        mentioning_accounts=summary.mentioning_accounts,
        bot_accounts=summary.bot_accounts,
        bot_threshold=summary.bot_threshold,
        coshared=_label_counts_model(summary.coshared),
        percent_controversial_coshared=summary.percent_controversial_coshared,
    )


def _options_model(options: SceneOptions) -> OptionsModel:
    return OptionsModel(
        direction=options.direction.value,
        hops=options.max_hops,
        labels=[v for v in _LABEL_ORDER if ReliabilityLabel(v) in options.labels],
        mode=options.mode.value,
        seed=options.seed,
        bot_threshold=options.bot_threshold,
        per_hop_cap=options.per_hop_cap,
    )


def scene_model(document: SceneDocument) -> SceneModel:
    """Convert an engine SceneDocument into its wire representation."""
    return SceneModel(
        center=document.center,
        center_label=document.center_label.value,
        graph=_graph_model(document.graph),
        layout=_layout_model(document.layout),
        summary=_summary_model(document.summary),
        twitter=_twitter_model(document.twitter),
        label_sources_notice=list(document.label_sources_notice),
        options_echo=_options_model(document.options_echo),
    )
