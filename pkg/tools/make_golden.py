#!/usr/bin/env python3
"""Regenerate the golden dataset and scene corpus under tests/data/golden/.

The dataset is small but exercises every scene feature: a mixed-label
cluster around x.test with same-ring hyperlinks, an outbound-only link,
and hub.test with 101 inbound linkers so an absolute-mode request
triggers the normalized fallback. Scene JSONs are byte-for-byte what the
HTTP service returns for the listed queries.

If frontend/tests/fixtures exists, the scene files are copied there too.
"""

from __future__ import annotations

import json
import shutil
from pathlib import Path

from weblens.config import ServiceConfig
from weblens.scene import get_scene, resolve_options
from weblens.schemas import scene_model
from weblens.store import load_store

ROOT = Path(__file__).resolve().parent.parent
GOLDEN_DIR = ROOT / "tests" / "data" / "golden"
SCENES_DIR = GOLDEN_DIR / "scenes"
FRONTEND_FIXTURES = ROOT / "frontend" / "tests" / "fixtures"

# per_hop_cap above 100 keeps the 101-linker hub ring intact so the
# absolute-mode request actually reaches the normalized fallback.
CONFIG = ServiceConfig(layout_seed=42, bot_threshold=0.5, per_hop_cap=150)

SITES = [
    ("a.test", "controversial", "Media Bias Fact Check"),
    ("b.test", "verified", "FakeNewsNet"),
    ("c.test", "unlabeled", ""),
    ("d.test", "verified", "Columbia Journalism Review"),
    ("e.test", "controversial", "Media Bias Fact Check;FakeNewsNet"),
    ("f.test", "verified", "Columbia Journalism Review"),
    ("g.test", "unlabeled", ""),
    ("hub.test", "verified", "FakeNewsNet"),
]

EDGES = [
    ("a.test", "x.test"),
    ("b.test", "x.test"),
    ("e.test", "x.test"),
    ("c.test", "a.test"),
    ("f.test", "a.test"),
    ("g.test", "b.test"),
    ("a.test", "b.test"),  # same-ring hyperlink -> curved edge
    ("x.test", "d.test"),  # outbound-only, shown under direction=both
]

MENTIONS = [
    {"account_id": "u1", "bot_score": 0.9, "mentioned": ["x.test", "a.test"]},
    {"account_id": "u2", "bot_score": 0.2, "mentioned": ["x.test", "b.test"]},
    {"account_id": "u3", "bot_score": 0.65, "mentioned": ["hub.test", "e.test", "x.test"]},
]

# name -> (center, raw query options)
SCENES = {
    "scene_x_default": ("x.test", {}),
    "scene_x_both": ("x.test", {"direction": "both"}),
    "scene_x_controversial_absolute": ("x.test", {"labels": "controversial", "mode": "absolute"}),
    "scene_x_hop1_absolute": ("x.test", {"hops": "1", "mode": "absolute"}),
    "scene_hub_absolute_fallback": ("hub.test", {"mode": "absolute"}),
    "scene_unknown_empty": ("unknown.test", {}),
}

LABEL_CYCLE = ["controversial", "verified", "unlabeled"]


def hub_rows() -> tuple[list[tuple[str, str, str]], list[tuple[str, str]]]:
    """101 inbound linkers for hub.test, labels cycling deterministically."""
    sites = []
    edges = []
    for i in range(101):
        domain = f"l{i:03d}.test"
        label = LABEL_CYCLE[i % 3]
        sources = "" if label == "unlabeled" else "Media Bias Fact Check"
        sites.append((domain, label, sources))
        edges.append((domain, "hub.test"))
    return sites, edges


def write_dataset() -> None:
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    extra_sites, extra_edges = hub_rows()
    sites_lines = ["domain,label,sources"] + [f"{d},{l},{s}" for d, l, s in SITES + extra_sites]
    (GOLDEN_DIR / "sites.csv").write_text("\n".join(sites_lines) + "\n")
    edges_lines = ["src,dst"] + [f"{s},{t}" for s, t in EDGES + extra_edges]
    (GOLDEN_DIR / "edges.csv").write_text("\n".join(edges_lines) + "\n")
    (GOLDEN_DIR / "mentions.jsonl").write_text(
        "".join(json.dumps(m) + "\n" for m in MENTIONS)
    )


def write_scenes() -> None:
    SCENES_DIR.mkdir(parents=True, exist_ok=True)
    store = load_store(
        GOLDEN_DIR / "sites.csv", GOLDEN_DIR / "edges.csv", GOLDEN_DIR / "mentions.jsonl"
    )
    for name, (center, raw_options) in SCENES.items():
        options = resolve_options(
            default_seed=CONFIG.layout_seed,
            bot_threshold=CONFIG.bot_threshold,
            per_hop_cap=CONFIG.per_hop_cap,
            **raw_options,
        )
        document = get_scene(store, center, options)
        payload = scene_model(document).model_dump_json(indent=2)
        (SCENES_DIR / f"{name}.json").write_text(payload + "\n")
        print(f"wrote {name}.json")

    if FRONTEND_FIXTURES.is_dir():
        for scene_file in SCENES_DIR.glob("*.json"):
            shutil.copy(scene_file, FRONTEND_FIXTURES / scene_file.name)
        print(f"copied scenes to {FRONTEND_FIXTURES}")


if __name__ == "__main__":
    write_dataset()
    write_scenes()
