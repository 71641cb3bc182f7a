"""Service configuration: dataset paths, listen address, and query defaults.

Configuration is a single static JSON file plus per-field overrides; the
store is immutable so there is no hot reload. The ``WEBLENS_CONFIG``
environment variable names the config file when ``--config`` is absent.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from pathlib import Path

from .errors import InvalidArgument, ParseError

CONFIG_ENV_VAR = "WEBLENS_CONFIG"

DEFAULT_LISTEN_ADDRESS = "127.0.0.1:8000"
DEFAULT_BOT_THRESHOLD = 0.5
DEFAULT_LAYOUT_SEED = 0
DEFAULT_PER_HOP_CAP = 100

_CONFIG_FIELDS = {
    "sites_path",
    "edges_path",
    "mentions_path",
    "listen_address",
    "bot_threshold",
    "layout_seed",
    "per_hop_cap",
    "static_dir",
}


@dataclass(frozen=True)
class ServiceConfig:
    sites_path: Path | None = None
    edges_path: Path | None = None
    mentions_path: Path | None = None
    listen_address: str = DEFAULT_LISTEN_ADDRESS
    bot_threshold: float = DEFAULT_BOT_THRESHOLD
    layout_seed: int = DEFAULT_LAYOUT_SEED
    per_hop_cap: int = DEFAULT_PER_HOP_CAP
    static_dir: Path | None = None

    def require_datasets(self) -> None:
        """Check that all three dataset paths are set and readable."""
        for name in ("sites_path", "edges_path", "mentions_path"):
            path: Path | None = getattr(self, name)
            if path is None:
                raise InvalidArgument(f"{name} is not configured")
            if not path.is_file():
                raise InvalidArgument(f"{name} does not exist: {path}")
        if self.per_hop_cap < 1:
            raise InvalidArgument(f"per_hop_cap must be >= 1, got {self.per_hop_cap}")
        if not 0.0 <= self.bot_threshold <= 1.0:
            raise InvalidArgument(f"bot_threshold {self.bot_threshold} outside [0, 1]")

    def host_port(self) -> tuple[str, int]:
        host, sep, port = self.listen_address.rpartition(":")
        if not sep or not port.isdigit():
            raise InvalidArgument(f"listen_address must be host:port, got {self.listen_address!r}")
        return host, int(port)


def load_config(path: str | Path) -> ServiceConfig:
    """Read a ServiceConfig from a JSON file; unknown keys are rejected."""
    path = Path(path)
    if not path.is_file():
        raise InvalidArgument(f"config file does not exist: {path}")
    try:
        raw = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise ParseError(f"{path}: config must be a JSON object")
    unknown = set(raw) - _CONFIG_FIELDS
    if unknown:
        raise ParseError(f"{path}: unknown config keys: {sorted(unknown)}")

    config = ServiceConfig()
    updates: dict = {}
    for key in ("sites_path", "edges_path", "mentions_path", "static_dir"):
        if raw.get(key) is not None:
            updates[key] = Path(raw[key])
    if "listen_address" in raw:
        updates["listen_address"] = str(raw["listen_address"])
    if "bot_threshold" in raw:
        updates["bot_threshold"] = float(raw["bot_threshold"])
    if "layout_seed" in raw:
        updates["layout_seed"] = int(raw["layout_seed"])
    if "per_hop_cap" in raw:
        updates["per_hop_cap"] = int(raw["per_hop_cap"])
    return replace(config, **updates)
