"""How the visited site is shared on Twitter: bot counts and co-shared reliability.

An account counts as a bot when its score reaches the threshold. Co-shared
sites are the distinct other domains mentioned by the accounts that
mention the visited site; the visited site itself is always excluded.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgument
from .store import DataStore, Domain, ReliabilityLabel
from .summary import LabelCounts

DEFAULT_BOT_THRESHOLD = 0.5


@dataclass(frozen=True)
class TwitterSummary:
    domain: Domain
    mentioning_accounts: int
    bot_accounts: int
    bot_threshold: float
    coshared: LabelCounts
    percent_controversial_coshared: float


def twitter_summary(store: DataStore, domain: Domain, bot_threshold: float = DEFAULT_BOT_THRESHOLD) -> TwitterSummary:
    """Summarize the accounts mentioning ``domain`` and what else they share.

    A never-mentioned domain yields an all-zero summary.
    """
    if not 0.0 <= bot_threshold <= 1.0:
        raise InvalidArgument(f"bot_threshold {bot_threshold} outside [0, 1]")

    account_ids = store.mentioning_accounts(domain)
    coshared_domains: set[Domain] = set()
    bots = 0
    for record in store.mentions:
        if record.account_id not in account_ids:
            continue
        if record.bot_score >= bot_threshold:
            bots += 1
        coshared_domains |= record.mentioned
    coshared_domains.discard(domain)

    counts = {label: 0 for label in ReliabilityLabel}
    for d in coshared_domains:
        counts[store.lookup_label(d)] += 1
    coshared = LabelCounts(
        controversial=counts[ReliabilityLabel.CONTROVERSIAL],
        verified=counts[ReliabilityLabel.VERIFIED],
        unlabeled=counts[ReliabilityLabel.UNLABELED],
    )
    percent = 100.0 * coshared.controversial / coshared.total if coshared.total else 0.0

    return TwitterSummary(
        domain=domain,
        mentioning_accounts=len(account_ids),
        bot_accounts=bots,
        bot_threshold=bot_threshold,
        coshared=coshared,
        percent_controversial_coshared=percent,
    )
