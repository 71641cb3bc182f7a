"""Engine and service for explaining a website's reliability through its
hyperlink neighborhood, reliability-label summary, and Twitter footprint."""

from .errors import (
    DuplicateAccount,
    DuplicateDomain,
    InvalidArgument,
    MalformedDomain,
    ParseError,
    WeblensError,
)
from .layout import EdgeGeometry, EdgeKind, LayoutParams, LayoutResult, NodePosition, compute_layout
from .neighborhood import Direction, NeighborhoodGraph, NeighborNode, extract_neighborhood
from .store import (
    DataStore,
    MentionRecord,
    ReliabilityLabel,
    SiteRecord,
    load_edges,
    load_mentions,
    load_sites,
    load_store,
    normalize_domain,
)
from .summary import Arc, LabelCounts, ReliabilitySummary, Ring, SummaryMode, build_summary, ring_distribution
from .twitter import TwitterSummary, twitter_summary

__version__ = "0.1.0"

__all__ = [
    "WeblensError",
    "MalformedDomain",
    "ParseError",
    "DuplicateDomain",
    "DuplicateAccount",
    "InvalidArgument",
    "DataStore",
    "SiteRecord",
    "MentionRecord",
    "ReliabilityLabel",
    "normalize_domain",
    "load_sites",
    "load_edges",
    "load_mentions",
    "load_store",
    "Direction",
    "NeighborNode",
    "NeighborhoodGraph",
    "extract_neighborhood",
    "LabelCounts",
    "Arc",
    "Ring",
    "SummaryMode",
    "ReliabilitySummary",
    "ring_distribution",
    "build_summary",
    "LayoutParams",
    "NodePosition",
    "EdgeKind",
    "EdgeGeometry",
    "LayoutResult",
    "compute_layout",
    "TwitterSummary",
    "twitter_summary",
    "__version__",
]
