"""Shared fixtures: the tiny 4-edge dataset used across the suite."""

from __future__ import annotations

import json
from pathlib import Path

import pytest

from weblens.store import DataStore, load_store

TINY_SITES = [
    ("a.test", "controversial", "Media Bias Fact Check"),
    ("b.test", "verified", "FakeNewsNet"),
    ("c.test", "unlabeled", ""),
    ("d.test", "verified", "Columbia Journalism Review"),
]

TINY_EDGES = [
    ("a.test", "x.test"),
    ("b.test", "x.test"),
    ("c.test", "a.test"),
    ("x.test", "d.test"),
]

TINY_MENTIONS = [
    {"account_id": "u1", "bot_score": 0.9, "mentioned": ["x.test", "a.test"]},
    {"account_id": "u2", "bot_score": 0.2, "mentioned": ["x.test", "b.test"]},
]


def write_dataset(directory: Path, sites, edges, mentions) -> dict[str, Path]:
    paths = {
        "sites": directory / "sites.csv",
        "edges": directory / "edges.csv",
        "mentions": directory / "mentions.jsonl",
    }
    lines = ["domain,label,sources"] + [f"{d},{l},{s}" for d, l, s in sites]
    paths["sites"].write_text("\n".join(lines) + "\n")
    lines = ["src,dst"] + [f"{s},{t}" for s, t in edges]
    paths["edges"].write_text("\n".join(lines) + "\n")
    paths["mentions"].write_text("".join(json.dumps(m) + "\n" for m in mentions))
    return paths


@pytest.fixture(scope="session")
def tiny_paths(tmp_path_factory) -> dict[str, Path]:
    directory = tmp_path_factory.mktemp("tiny")
    return write_dataset(directory, TINY_SITES, TINY_EDGES, TINY_MENTIONS)


@pytest.fixture(scope="session")
def tiny_store(tiny_paths) -> DataStore:
    return load_store(tiny_paths["sites"], tiny_paths["edges"], tiny_paths["mentions"])
