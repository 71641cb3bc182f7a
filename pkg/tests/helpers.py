"""Test-side oracles and random-graph builders, independent of the engine.

The min-hop oracle relaxes distances over the raw edge list instead of
running a layered expansion, and the crossing counter works on plain
cartesian segments, so both stay independent of the code paths they
check.
"""

from __future__ import annotations

import itertools
import math
import random

from weblens.store import DataStore, ReliabilityLabel, SiteRecord

LABEL_CYCLE = [
    ReliabilityLabel.CONTROVERSIAL,
    ReliabilityLabel.VERIFIED,
    ReliabilityLabel.UNLABELED,
]


def make_store(
    edges: list[tuple[str, str]],
    labels: dict[str, ReliabilityLabel] | None = None,
    mentions=(),
    mention_index=None,
) -> DataStore:
    labels = labels or {}
    sites = {
        domain: SiteRecord(
            domain=domain,
            label=label,
            sources=() if label is ReliabilityLabel.UNLABELED else ("src",),
        )
        for domain, label in labels.items()
    }
    out_sets: dict[str, set[str]] = {}
    in_sets: dict[str, set[str]] = {}
    for src, dst in edges:
        if src == dst:
            continue
        out_sets.setdefault(src, set()).add(dst)
        in_sets.setdefault(dst, set()).add(src)
    return DataStore(
        sites=sites,
        out_edges={k: frozenset(v) for k, v in out_sets.items()},
        in_edges={k: frozenset(v) for k, v in in_sets.items()},
        mentions=tuple(mentions),
        mention_index=dict(mention_index or {}),
    )


def random_graph(rng: random.Random, n: int, p: float) -> tuple[list[tuple[str, str]], dict[str, ReliabilityLabel]]:
    domains = [f"site{i:03d}.test" for i in range(n)]
    edges = [
        (s, t)
        for s in domains
        for t in domains
        if s != t and rng.random() < p
    ]
    labels = {d: rng.choice(LABEL_CYCLE) for d in domains}
    return edges, labels


def min_hops_oracle(edges: list[tuple[str, str]], center: str, direction: str) -> dict[str, int]:
    """Min-hop distances from the center by brute-force relaxation.

    ``direction`` is "in" (traverse hyperlinks backwards) or "both".
    """
    relation: set[tuple[str, str]] = set()
    for src, dst in edges:
        if src == dst:
            continue
        relation.add((dst, src))
        if direction == "both":
            relation.add((src, dst))
    dist = {center: 0}
    changed = True
    while changed:
        changed = False
        for u, v in sorted(relation):
            if u in dist and dist[u] + 1 < dist.get(v, math.inf):
                dist[v] = dist[u] + 1
                changed = True
    return dist


def polar_to_xy(radius: float, angle: float) -> tuple[float, float]:
    return (radius * math.cos(angle), radius * math.sin(angle))


def _orient(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if abs(v) < 1e-12:
        return 0
    return 1 if v > 0 else -1


def _segments_cross(p1, p2, p3, p4) -> bool:
    if len({p1, p2, p3, p4}) < 4:
        return False
    d1, d2 = _orient(p3, p4, p1), _orient(p3, p4, p2)
    d3, d4 = _orient(p1, p2, p3), _orient(p1, p2, p4)
    return d1 * d2 < 0 and d3 * d4 < 0


def count_crossings(positions: dict[str, tuple[float, float]], edges) -> int:
    """Proper intersections between straight edge segments."""
    segments = [(positions[src], positions[dst]) for src, dst in edges]
    crossings = 0
    for (a, b), (c, d) in itertools.combinations(segments, 2):
        if _segments_cross(a, b, c, d):
            crossings += 1
    return crossings
