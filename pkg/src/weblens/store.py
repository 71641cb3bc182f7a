"""Ingestion and indexing of the labeled-site table, hyperlink edges, and Twitter mentions.

The store is built once from three files (``sites.csv``, ``edges.csv``,
``mentions.jsonl``) and is immutable afterwards; every query module reads
from it concurrently without locking. Domains are normalized at the
boundary so that the rest of the engine only ever sees canonical
lowercase registrable domains.
"""

from __future__ import annotations

import csv
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .errors import DuplicateAccount, DuplicateDomain, MalformedDomain, ParseError

# A normalized domain is plain `str`; normalize_domain() is the only producer.
Domain = str

_DOMAIN_RE = re.compile(r"^[a-z0-9-]+(\.[a-z0-9-]+)+$")


class ReliabilityLabel(str, Enum):
    """The three reliability labels every site resolves to exactly one of."""

    CONTROVERSIAL = "controversial"
    VERIFIED = "verified"
    UNLABELED = "unlabeled"


@dataclass(frozen=True)
class SiteRecord:
    domain: Domain
    label: ReliabilityLabel
    sources: tuple[str, ...] = ()


@dataclass(frozen=True)
class MentionRecord:
    account_id: str
    bot_score: float
    mentioned: frozenset[Domain]


def normalize_domain(raw: str) -> Domain:
    """Normalize a raw domain or URL-ish string to a canonical domain.

    Lowercases, strips an ``http://``/``https://`` scheme, any path, query
    or fragment, a port, and a leading ``www.``. Other subdomains are kept:
    ``news.example.com`` and ``example.com`` are distinct sites.

    Raises MalformedDomain if the result is empty, has no dot, or contains
    characters outside ``[a-z0-9.-]``.
    """
    value = raw.strip().lower()
    if not value:
        raise MalformedDomain("empty domain string")
    for scheme in ("https://", "http://"):
        if value.startswith(scheme):
            value = value[len(scheme):]
            break
    # Cut at the first path/query/fragment separator, then drop the port.
    value = re.split(r"[/?#]", value, maxsplit=1)[0]
    value = value.split(":", 1)[0]
    # Strip leading www labels, but never down to something invalid
    # (www.com stays www.com); this keeps normalization idempotent.
    while value.startswith("www.") and "." in value[len("www."):]:
        value = value[len("www."):]
    if not _DOMAIN_RE.match(value):
        raise MalformedDomain(f"not a valid domain: {raw!r}")
    return value


@dataclass(frozen=True)
class DataStore:
    """Immutable indexes over sites, hyperlink edges, and Twitter mentions.

    ``in_edges`` and ``out_edges`` are exact transposes of each other.
    Domains absent from ``sites`` are still answerable: ``lookup_label``
    falls back to UNLABELED, so every query over edges or mentions is total.
    """

    sites: dict[Domain, SiteRecord] = field(default_factory=dict)
    out_edges: dict[Domain, frozenset[Domain]] = field(default_factory=dict)
    in_edges: dict[Domain, frozenset[Domain]] = field(default_factory=dict)
    mentions: tuple[MentionRecord, ...] = ()
    mention_index: dict[Domain, frozenset[str]] = field(default_factory=dict)
    self_loops_dropped: int = 0

    def lookup_label(self, domain: Domain) -> ReliabilityLabel:
        """Label of a domain, UNLABELED if the site table does not know it."""
        record = self.sites.get(domain)
        return record.label if record is not None else ReliabilityLabel.UNLABELED

    def lookup_sources(self, domain: Domain) -> tuple[str, ...]:
        record = self.sites.get(domain)
        return record.sources if record is not None else ()

    def all_sources(self) -> list[str]:
        """Deduplicated, sorted source names across the whole site table."""
        names = {name for record in self.sites.values() for name in record.sources}
        return sorted(names)

    def outgoing(self, domain: Domain) -> frozenset[Domain]:
        return self.out_edges.get(domain, frozenset())

    def incoming(self, domain: Domain) -> frozenset[Domain]:
        return self.in_edges.get(domain, frozenset())

    def mentioning_accounts(self, domain: Domain) -> frozenset[str]:
        return self.mention_index.get(domain, frozenset())

    @property
    def edge_count(self) -> int:
        return sum(len(targets) for targets in self.out_edges.values())


def load_sites(path: str | Path) -> dict[Domain, SiteRecord]:
    """Load the site table from a ``domain,label,sources`` CSV.

    Sources are ``;``-separated and may be empty only for unlabeled rows;
    controversial and verified labels must name at least one source.
    Duplicate domains (after normalization) are rejected.
    """
    sites: dict[Domain, SiteRecord] = {}
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["domain", "label", "sources"]:
            raise ParseError(f"{path}: expected header 'domain,label,sources', got {header}")
        for lineno, row in enumerate(reader, start=2):
            if not row or row == [""]:
                continue
            if len(row) != 3:
                raise ParseError(f"{path}:{lineno}: expected 3 fields, got {len(row)}")
            raw_domain, raw_label, raw_sources = row
            try:
                domain = normalize_domain(raw_domain)
            except MalformedDomain as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
            try:
                label = ReliabilityLabel(raw_label.strip().lower())
            except ValueError:
                raise ParseError(f"{path}:{lineno}: unknown label {raw_label!r}") from None
            sources = tuple(s.strip() for s in raw_sources.split(";") if s.strip())
            if label is not ReliabilityLabel.UNLABELED and not sources:
                raise ParseError(
                    f"{path}:{lineno}: label {label.value!r} requires at least one source"
                )
            if domain in sites:
                raise DuplicateDomain(f"{path}:{lineno}: duplicate domain {domain!r}")
            sites[domain] = SiteRecord(domain=domain, label=label, sources=sources)
    return sites


def load_edges(path: str | Path) -> tuple[dict[Domain, frozenset[Domain]], dict[Domain, frozenset[Domain]], int]:
    """Load hyperlink edges from a ``src,dst`` CSV.

    Returns ``(out_edges, in_edges, self_loops_dropped)``. Edges are a set:
    duplicates collapse. Self-loops are dropped and counted, not an error.
    """
    out_sets: dict[Domain, set[Domain]] = {}
    in_sets: dict[Domain, set[Domain]] = {}
    self_loops = 0
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != ["src", "dst"]:
            raise ParseError(f"{path}: expected header 'src,dst', got {header}")
        for lineno, row in enumerate(reader, start=2):
            if not row or row == [""]:
                continue
            if len(row) != 2:
                raise ParseError(f"{path}:{lineno}: expected 2 fields, got {len(row)}")
            try:
                src = normalize_domain(row[0])
                dst = normalize_domain(row[1])
            except MalformedDomain as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
            if src == dst:
                self_loops += 1
                continue
            out_sets.setdefault(src, set()).add(dst)
            in_sets.setdefault(dst, set()).add(src)
    out_edges = {s: frozenset(t) for s, t in out_sets.items()}
    in_edges = {s: frozenset(t) for s, t in in_sets.items()}
    return out_edges, in_edges, self_loops


def load_mentions(path: str | Path) -> tuple[tuple[MentionRecord, ...], dict[Domain, frozenset[str]]]:
    """Load the Twitter-mention corpus from JSON lines.

    Each line is ``{"account_id": str, "bot_score": float, "mentioned": [domains]}``.
    Records with an empty mention set and duplicate account ids are rejected.
    Returns ``(records, mention_index)`` where the index maps each domain to
    the set of account ids mentioning it.
    """
    records: list[MentionRecord] = []
    seen_ids: set[str] = set()
    index: dict[Domain, set[str]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise ParseError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            try:
                account_id = str(obj["account_id"])
                bot_score = float(obj["bot_score"])
                mentioned_raw = obj["mentioned"]
            except (KeyError, TypeError, ValueError) as exc:
                raise ParseError(f"{path}:{lineno}: missing or malformed field: {exc}") from exc
            if not isinstance(mentioned_raw, list) or not mentioned_raw:
                raise ParseError(f"{path}:{lineno}: 'mentioned' must be a non-empty list")
            if not 0.0 <= bot_score <= 1.0:
                raise ParseError(f"{path}:{lineno}: bot_score {bot_score} outside [0, 1]")
            if account_id in seen_ids:
                raise DuplicateAccount(f"{path}:{lineno}: duplicate account {account_id!r}")
            seen_ids.add(account_id)
            try:
                mentioned = frozenset(normalize_domain(d) for d in mentioned_raw)
            except MalformedDomain as exc:
                raise ParseError(f"{path}:{lineno}: {exc}") from exc
            records.append(MentionRecord(account_id=account_id, bot_score=bot_score, mentioned=mentioned))
            for domain in mentioned:
                index.setdefault(domain, set()).add(account_id)
    mention_index = {d: frozenset(ids) for d, ids in index.items()}
    return tuple(records), mention_index


def load_store(sites_path: str | Path, edges_path: str | Path, mentions_path: str | Path) -> DataStore:
    """Build the complete immutable store from the three dataset files."""
    sites = load_sites(sites_path)
    out_edges, in_edges, self_loops = load_edges(edges_path)
    mentions, mention_index = load_mentions(mentions_path)
    return DataStore(
        sites=sites,
        out_edges=out_edges,
        in_edges=in_edges,
        mentions=mentions,
        mention_index=mention_index,
        self_loops_dropped=self_loops,
    )
