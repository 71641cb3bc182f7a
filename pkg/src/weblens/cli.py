"""Command-line entry points: dataset validation, serving, and offline scenes.

The CLI is a thin layer over the engine: ``ingest`` loads and reports
dataset statistics, ``serve`` starts the HTTP service, and ``scene``
prints one scene document as JSON for offline use and tests. All three
read the same config file (``--config`` or the WEBLENS_CONFIG
environment variable) with per-field flag overrides.
"""

from __future__ import annotations

import argparse
import os
import sys
from dataclasses import replace
from pathlib import Path

from .config import CONFIG_ENV_VAR, ServiceConfig, load_config
from .errors import WeblensError
from .scene import get_scene, resolve_options
from .schemas import scene_model
from .store import load_store


def _add_config_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", help=f"config file path (default: ${CONFIG_ENV_VAR})")
    parser.add_argument("--sites", help="override sites.csv path")
    parser.add_argument("--edges", help="override edges.csv path")
    parser.add_argument("--mentions", help="override mentions.jsonl path")
    parser.add_argument("--listen", help="override listen address (host:port)")
    parser.add_argument("--bot-threshold", type=float, help="override bot score cutoff")
    parser.add_argument("--layout-seed", type=int, help="override default layout seed")
    parser.add_argument("--per-hop-cap", type=int, help="override per-ring node cap")
    parser.add_argument("--static-dir", help="directory with the UI bundle to serve at /")


def _resolve_config(args: argparse.Namespace) -> ServiceConfig:
    config_path = args.config or os.environ.get(CONFIG_ENV_VAR)
    config = load_config(config_path) if config_path else ServiceConfig()
    overrides: dict = {}
    if args.sites:
        overrides["sites_path"] = Path(args.sites)
    if args.edges:
        overrides["edges_path"] = Path(args.edges)
    if args.mentions:
        overrides["mentions_path"] = Path(args.mentions)
    if args.listen:
        overrides["listen_address"] = args.listen
    if args.bot_threshold is not None:
        overrides["bot_threshold"] = args.bot_threshold
    if args.layout_seed is not None:
        overrides["layout_seed"] = args.layout_seed
    if args.per_hop_cap is not None:
        overrides["per_hop_cap"] = args.per_hop_cap
    if args.static_dir:
        overrides["static_dir"] = Path(args.static_dir)
    return replace(config, **overrides)


def _load(config: ServiceConfig):
    config.require_datasets()
    return load_store(config.sites_path, config.edges_path, config.mentions_path)


def _cmd_ingest(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    store = _load(config)
    print(
        f"{len(store.sites)} labeled sites, {store.edge_count} edges, "
        f"{len(store.mentions)} mention records"
    )
    print(f"{store.self_loops_dropped} self-loops dropped")
    return 0


def _cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    from .api import create_app

    config = _resolve_config(args)
    store = _load(config)
    host, port = config.host_port()
    uvicorn.run(create_app(store, config), host=host, port=port)
    return 0


def _cmd_scene(args: argparse.Namespace) -> int:
    config = _resolve_config(args)
    store = _load(config)
    options = resolve_options(
        direction=args.direction,
        hops=args.hops,
        labels=args.labels,
        mode=args.mode,
        seed=args.seed,
        default_seed=config.layout_seed,
        bot_threshold=config.bot_threshold,
        per_hop_cap=config.per_hop_cap,
    )
    document = get_scene(store, args.domain, options)
    print(scene_model(document).model_dump_json(indent=2))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weblens", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    ingest = sub.add_parser("ingest", help="validate datasets and report their sizes")
    _add_config_options(ingest)
    ingest.set_defaults(func=_cmd_ingest)

    serve = sub.add_parser("serve", help="start the HTTP service")
    _add_config_options(serve)
    serve.set_defaults(func=_cmd_serve)

    scene = sub.add_parser("scene", help="print one scene document as JSON")
    _add_config_options(scene)
    scene.add_argument("domain", help="visited domain (URL-ish strings accepted)")
    scene.add_argument("--direction", choices=["in", "both"], help="traversal direction")
    scene.add_argument("--hops", choices=["1", "2"], help="neighborhood depth")
    scene.add_argument("--labels", help="comma-separated reliability labels to show")
    scene.add_argument("--mode", choices=["normalized", "absolute"], help="doughnut mode")
    scene.add_argument("--seed", type=int, help="layout seed override")
    scene.set_defaults(func=_cmd_scene)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except WeblensError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
