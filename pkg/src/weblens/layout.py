"""Deterministic radial layout: center at the origin, hops on exact rings.

Only angles are relaxed; radii are fixed by hop, so ring membership is
exact by construction rather than enforced by a soft constraint. Each
iteration applies pairwise angular repulsion between same-ring nodes
(inversely proportional to angular distance), angular attraction along
edges, a per-node step clamp, and a multiplicative cooling of the step
size. Initial angles come from a splitmix64 stream over the seed, so a
given (graph, params) pair always produces bit-identical output.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Sequence

import numpy as np

from .errors import InvalidArgument
from .neighborhood import NeighborhoodGraph
from .store import Domain

_MASK64 = (1 << 64) - 1
_TWO_PI = 2.0 * math.pi

# Curved edges bow outward from the ring by this fraction of its radius.
CURVE_OFFSET = 0.15

# Per-iteration angular step is clamped to this many radians before cooling.
_MAX_STEP = 1.0


class EdgeKind(str, Enum):
    STRAIGHT = "straight"
    CURVED = "curved"


@dataclass(frozen=True)
class LayoutParams:
    r1: float = 1.0
    r2: float = 2.0
    iterations: int = 300
    repulsion_k: float = 0.05
    attraction_k: float = 0.02
    cooling: float = 0.99
    seed: int = 0

    def __post_init__(self) -> None:
        if not 0 < self.r1 < self.r2:
            raise InvalidArgument(f"require 0 < r1 < r2, got r1={self.r1}, r2={self.r2}")
        if self.iterations < 1:
            raise InvalidArgument(f"iterations must be >= 1, got {self.iterations}")
        if not 0 < self.cooling <= 1:
            raise InvalidArgument(f"cooling must be in (0, 1], got {self.cooling}")
        if not 0 <= self.seed <= _MASK64:
            raise InvalidArgument(f"seed must be an unsigned 64-bit integer, got {self.seed}")


@dataclass(frozen=True)
class NodePosition:
    domain: Domain
    radius: float  # 0 for the center, else exactly r1 or r2
    angle: float  # radians in [0, 2*pi)


@dataclass(frozen=True)
class EdgeGeometry:
    """Drawing classification of one hyperlink; animation flows src -> dst."""

    src: Domain
    dst: Domain
    kind: EdgeKind
    control_point: tuple[float, float] | None
    animate_by_default: bool


@dataclass(frozen=True)
class LayoutResult:
    positions: tuple[NodePosition, ...]
    edges: tuple[EdgeGeometry, ...]
    params: LayoutParams = field(default_factory=LayoutParams)


def seed_angles(domains: Sequence[Domain], seed: int) -> list[float]:
    """Initial angle per domain from a splitmix64 stream over ``seed``.

    The stream is consumed in the order the domains are given, so callers
    must pass a deterministically ordered sequence.
    """
    state = seed & _MASK64
    angles = []
    for _ in domains:
        state = (state + 0x9E3779B97F4A7C15) & _MASK64
        z = state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        z ^= z >> 31
        angles.append(z / 2.0**64 * _TWO_PI)
    return angles


def _wrap(delta: np.ndarray | float) -> np.ndarray | float:
    """Signed angular difference folded into [-pi, pi)."""
    return (delta + math.pi) % _TWO_PI - math.pi


def _relax(
    angles: np.ndarray,
    rings: list[np.ndarray],
    edge_pairs: np.ndarray,
    params: LayoutParams,
) -> np.ndarray:
    temperature = 1.0
    sign_by_index = [np.sign(np.arange(len(ring))[:, None] - np.arange(len(ring))[None, :]) for ring in rings]
    for _ in range(params.iterations):
        disp = np.zeros_like(angles)
        for ring, signs in zip(rings, sign_by_index):
            if len(ring) < 2:
                continue
            theta = angles[ring]
            diff = _wrap(theta[:, None] - theta[None, :])
            # Coincident angles get a deterministic nudge instead of a blowup.
            diff = np.where(diff == 0.0, 1e-9 * signs, diff)
            np.fill_diagonal(diff, np.inf)
            disp[ring] += (params.repulsion_k / diff).sum(axis=1)
        if len(edge_pairs):
            delta = _wrap(angles[edge_pairs[:, 1]] - angles[edge_pairs[:, 0]])
            pull = params.attraction_k * delta
            np.add.at(disp, edge_pairs[:, 0], pull)
            np.add.at(disp, edge_pairs[:, 1], -pull)
        angles = (angles + np.clip(disp, -_MAX_STEP, _MAX_STEP) * temperature) % _TWO_PI
        temperature *= params.cooling
    return angles


def compute_layout(graph: NeighborhoodGraph, params: LayoutParams | None = None) -> LayoutResult:
    """Position every graph node on its ring and classify every edge.

    An empty graph yields a center-only layout. The center never moves;
    edges touching it exert no angular force.
    """
    if params is None:
        params = LayoutParams()

    ordered = sorted(graph.nodes, key=lambda n: (n.hop, n.domain))
    domains = [n.domain for n in ordered]
    index = {d: i for i, d in enumerate(domains)}
    hop_of = {n.domain: n.hop for n in ordered}

    angles = np.asarray(seed_angles(domains, params.seed), dtype=np.float64)
    rings = [
        np.asarray([i for i, n in enumerate(ordered) if n.hop == hop], dtype=np.intp)
        for hop in (1, 2)
    ]
    edge_pairs = np.asarray(
        [
            (index[src], index[dst])
            for src, dst in graph.edges
            if src != graph.center and dst != graph.center
        ],
        dtype=np.intp,
    ).reshape(-1, 2)

    if domains:
        angles = _relax(angles, rings, edge_pairs, params)

    radius_of = {graph.center: 0.0}
    positions = [NodePosition(domain=graph.center, radius=0.0, angle=0.0)]
    angle_of: dict[Domain, float] = {}
    for node, angle in zip(ordered, angles):
        radius = params.r1 if node.hop == 1 else params.r2
        radius_of[node.domain] = radius
        angle_of[node.domain] = float(angle)
        positions.append(NodePosition(domain=node.domain, radius=radius, angle=float(angle)))

    edges = []
    for src, dst in graph.edges:
        r_src, r_dst = radius_of[src], radius_of[dst]
        curved = r_src == r_dst and r_src > 0.0
        control_point = None
        if curved:
            mid = (angle_of[src] + _wrap(angle_of[dst] - angle_of[src]) / 2.0) % _TWO_PI
            cp_radius = r_src * (1.0 + CURVE_OFFSET)
            control_point = (cp_radius * math.cos(mid), cp_radius * math.sin(mid))
        animate = (src == graph.center and hop_of.get(dst) == 1) or (
            dst == graph.center and hop_of.get(src) == 1
        )
        edges.append(
            EdgeGeometry(
                src=src,
                dst=dst,
                kind=EdgeKind.CURVED if curved else EdgeKind.STRAIGHT,
                control_point=control_point,
                animate_by_default=animate,
            )
        )

    return LayoutResult(positions=tuple(positions), edges=tuple(edges), params=params)
