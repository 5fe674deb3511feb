"""HTTP front of the pipeline plus service configuration.

The service owns one immutable index shared by all requests; the only
mutation anywhere is the atomic swap performed by the administrative
reload endpoint. Every response body carries schema_version, and /graph
bodies are the same canonical serialization the CLI emits, so the two
transports can be byte-compared.
"""

from __future__ import annotations

import json
import logging
import os
import threading
from dataclasses import dataclass, replace
from pathlib import Path
from typing import Any, Mapping

from fastapi import FastAPI, HTTPException, Request, Response
from fastapi.responses import JSONResponse, RedirectResponse
from fastapi.staticfiles import StaticFiles

from .corpus import CorpusIndex, Tokenizer, build_index, load_index, load_stopwords, read_corpus_dir
from .extraction import ClassConfig
from .layout import LayoutConfig
from .pipeline import MODES, SCHEMA_VERSION, build_graph, search_payload
from .retrieval import EmptyQueryError

logger = logging.getLogger(__name__)

ENV_PREFIX = "TOPICGRAPH_"

_INT_KEYS = {"port", "page_size", "default_n", "default_c"}
_FLOAT_KEYS = {"default_l", "default_b"}
_STR_KEYS = {"host", "index_path", "corpus_dir", "stopwords_path", "static_dir", "default_mode"}


@dataclass(frozen=True)
class ServiceConfig:
    """Service settings, sourced file < environment < explicit override.

    The file format is one key=value per line, # comments allowed.
    Environment variables use the same keys uppercased with a
    TOPICGRAPH_ prefix (TOPICGRAPH_PORT=9000).
    """

    host: str = "127.0.0.1"
    port: int = 8765
    index_path: str = "index.json"
    corpus_dir: str | None = None
    stopwords_path: str | None = None
    static_dir: str | None = None
    page_size: int = 20
    default_n: int = 15
    default_c: int = 3
    default_l: float = 1 / 32
    default_b: float = 0.0
    default_mode: str = "classed"


def _coerce(key: str, raw: str) -> Any:
    if key in _INT_KEYS:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"config key {key} must be an integer, got {raw!r}") from None
    if key in _FLOAT_KEYS:
        try:
            return float(raw)
        except ValueError:
            raise ValueError(f"config key {key} must be a number, got {raw!r}") from None
    if key in _STR_KEYS:
        return raw
    raise ValueError(f"unknown config key {key!r}")


def parse_config_text(text: str) -> dict[str, Any]:
    values: dict[str, Any] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ValueError(f"config line {lineno}: expected key=value, got {line!r}")
        key, _, raw = stripped.partition("=")
        values[key.strip()] = _coerce(key.strip(), raw.strip())
    return values


def load_config(
    path: str | Path | None = None, env: Mapping[str, str] | None = None
) -> ServiceConfig:
    """Build a ServiceConfig from an optional key=value file with
    environment overrides applied on top."""
    env = os.environ if env is None else env
    values: dict[str, Any] = {}
    if path is not None:
        values.update(parse_config_text(Path(path).read_text(encoding="utf-8")))
    for key in _INT_KEYS | _FLOAT_KEYS | _STR_KEYS:
        raw = env.get(ENV_PREFIX + key.upper())
        if raw is not None:
            values[key] = _coerce(key, raw)
    return replace(ServiceConfig(), **values)


class IndexHolder:
    """Shared index with an atomic swap for administrative reloads.

    Reads never lock: the index attribute is replaced as a whole, so a
    request sees either the old or the new index, never a mix.
    """

    def __init__(self, index: CorpusIndex):
        self.index = index
        self._swap_lock = threading.Lock()

    def swap(self, index: CorpusIndex) -> None:
        with self._swap_lock:
            self.index = index


def _build_tokenizer(config: ServiceConfig) -> Tokenizer | None:
    if config.stopwords_path is None:
        return None
    return Tokenizer(load_stopwords(config.stopwords_path))


def load_service_index(config: ServiceConfig) -> CorpusIndex:
    """Resolve the index for the configured service.

    Prefers the saved index file; falls back to building from
    corpus_dir. With neither available, fails with a hint naming the
    command that creates the index.
    """
    index_path = Path(config.index_path)
    if index_path.is_file():
        return load_index(index_path)
    if config.corpus_dir is not None and Path(config.corpus_dir).is_dir():
        docs = read_corpus_dir(config.corpus_dir)
        return build_index(docs, tokenizer=_build_tokenizer(config))
    raise FileNotFoundError(
        f"no index at {config.index_path} and no corpus_dir to build from; "
        f"run: topicgraph index build <corpus-dir> --out {config.index_path}"
    )


def _canonical_response(obj: dict[str, Any], status_code: int = 200) -> Response:
    body = json.dumps(obj, ensure_ascii=False, separators=(",", ":"), allow_nan=False)
    return Response(content=body, media_type="application/json", status_code=status_code)


def _parse_number(params: Mapping[str, str], name: str, default, kind):
    raw = params.get(name)
    if raw is None:
        return default
    try:
        return kind(raw)
    except ValueError:
        label = "an integer" if kind is int else "a number"
        raise HTTPException(400, f"parameter {name} must be {label}, got {raw!r}") from None


def create_app(config: ServiceConfig | None = None, holder: IndexHolder | None = None) -> FastAPI:
    """Assemble the application. holder may be injected for tests; by
    default the index is resolved from config at startup."""
    config = config or ServiceConfig()
    if holder is None:
        holder = IndexHolder(load_service_index(config))
    app = FastAPI(title="topicgraph", version="1")
    app.state.holder = holder
    app.state.config = config

    @app.exception_handler(HTTPException)
    async def _http_error(request: Request, exc: HTTPException) -> JSONResponse:
        return JSONResponse(
            {"schema_version": SCHEMA_VERSION, "error": exc.detail}, status_code=exc.status_code
        )

    def _require_q(request: Request) -> str:
        q = request.query_params.get("q")
        if q is None:
            raise HTTPException(400, "missing required parameter q")
        return q

    @app.get("/search")
    def search(request: Request) -> Response:
        q = _require_q(request)
        try:
            payload = search_payload(holder.index, q, page_size=config.page_size)
        except EmptyQueryError:
            raise HTTPException(400, f"parameter q has no usable terms: {q!r}") from None
        return _canonical_response(payload)

    @app.get("/graph")
    def graph(request: Request) -> Response:
        params = request.query_params
        q = _require_q(request)
        n = _parse_number(params, "n", config.default_n, int)
        c = _parse_number(params, "c", config.default_c, int)
        l = _parse_number(params, "l", config.default_l, float)
        b = _parse_number(params, "b", config.default_b, float)
        mode = params.get("mode", config.default_mode)
        if mode not in MODES:
            raise HTTPException(400, f"parameter mode must be one of {MODES}, got {mode!r}")
        try:
            class_cfg = ClassConfig(n=n, c=c, l=l, b=b)
        except ValueError as exc:
            # ClassConfig errors already name the offending parameter.
            raise HTTPException(400, f"parameter {exc}") from None
        try:
            payload = build_graph(
                holder.index, q, class_cfg=class_cfg, layout_cfg=LayoutConfig(), mode=mode
            )
        except EmptyQueryError:
            raise HTTPException(400, f"parameter q has no usable terms: {q!r}") from None
        return Response(content=payload.to_json(), media_type="application/json")

    @app.post("/admin/reload")
    def reload_index() -> Response:
        try:
            index = load_service_index(config)
        except (OSError, ValueError) as exc:
            raise HTTPException(500, f"reload failed, keeping current index: {exc}") from None
        holder.swap(index)
        logger.info("index reloaded: %d documents", index.doc_count)
        return _canonical_response(
            {"schema_version": SCHEMA_VERSION, "reloaded": True, "doc_count": index.doc_count}
        )

    if config.static_dir is not None and Path(config.static_dir).is_dir():
        app.mount("/ui", StaticFiles(directory=config.static_dir, html=True), name="ui")

        @app.get("/")
        def root() -> RedirectResponse:
            return RedirectResponse("/ui/")
    else:

        @app.get("/")
        def root() -> Response:
            return _canonical_response(
                {
                    "schema_version": SCHEMA_VERSION,
                    "endpoints": ["/search?q=", "/graph?q=", "/admin/reload", "/ui/"],
                }
            )

    return app


def serve(config: ServiceConfig) -> None:
    """Run the service until interrupted. Fails fast (before binding)
    when no index can be resolved."""
    import uvicorn

    holder = IndexHolder(load_service_index(config))
    app = create_app(config, holder=holder)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")
