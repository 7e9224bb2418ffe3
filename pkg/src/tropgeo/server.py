"""JSON-over-HTTP scene evaluation service.

POST /api/evaluate takes a Scene payload and returns the EvaluatedScene;
GET /api/health reports liveness.  The service is stateless: clients send
the whole scene on every request, so requests are independent and safe to
serve concurrently.
"""

from __future__ import annotations

from fastapi import Body, FastAPI
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse

from .scene import SceneFormatError, evaluate_scene, parse_scene


def create_app() -> FastAPI:
    app = FastAPI(title="tropgeo scene service")
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["*"],
        allow_headers=["*"],
    )

    @app.get("/api/health")
    def health():
        return {"status": "ok"}

    @app.post("/api/evaluate")
    def evaluate(payload: dict = Body(...)):
        try:
            scene = parse_scene(payload)
        except SceneFormatError as exc:
            return JSONResponse(status_code=400, content={"error": str(exc)})
        return evaluate_scene(scene).to_json()

    return app


def serve(port: int, host: str = "127.0.0.1") -> None:
    import os

    import uvicorn

    # The only environment knob: TROPGEO_LOG_LEVEL (uvicorn level names).
    level = os.environ.get("TROPGEO_LOG_LEVEL", "warning")
    uvicorn.run(create_app(), host=host, port=port, log_level=level)
