"""HTTP service: scene queries, health, and static serving of the UI bundle.

All handlers read from the immutable store built at startup, so any
number of requests may run concurrently. Invalid query options return
400 with a message; an unknown domain is never 404, it yields an empty
scene.
"""

from __future__ import annotations

from fastapi import FastAPI, HTTPException
from fastapi.staticfiles import StaticFiles

from .config import ServiceConfig
from .errors import InvalidArgument, MalformedDomain
from .scene import get_scene, resolve_options
from .schemas import HealthModel, SceneModel, scene_model
from .store import DataStore


def create_app(store: DataStore, config: ServiceConfig | None = None) -> FastAPI:
    if config is None:
        config = ServiceConfig()

    app = FastAPI(title="weblens", version="0.1.0")

    @app.get("/api/v1/health", response_model=HealthModel)
    def health() -> HealthModel:
        return HealthModel(status="ok", sites=len(store.sites), edges=store.edge_count)

    @app.get("/api/v1/scene/{domain}", response_model=SceneModel)
    def scene(
        domain: str,
        direction: str | None = None,
        hops: str | None = None,
        labels: str | None = None,
        mode: str | None = None,
        seed: str | None = None,
    ) -> SceneModel:
        try:
            options = resolve_options(
                direction=direction,
                hops=hops,
                labels=labels,
                mode=mode,
                seed=seed,
                default_seed=config.layout_seed,
                bot_threshold=config.bot_threshold,
                per_hop_cap=config.per_hop_cap,
            )
            document = get_scene(store, domain, options)
        except (InvalidArgument, MalformedDomain) as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return scene_model(document)

    if config.static_dir is not None and config.static_dir.is_dir():
        app.mount("/", StaticFiles(directory=config.static_dir, html=True), name="ui")

    return app
