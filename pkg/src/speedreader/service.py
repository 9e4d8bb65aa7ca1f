"""Threaded HTTP front door for the processing pipeline.

JSON-only API under /api/v1:

    POST /api/v1/process  body: ProcessRequest JSON -> ProcessResult JSON
    GET  /api/v1/health   -> {"status": "ok", "version": ...}
    GET  /                -> web UI bundle when built, else a placeholder page

Error bodies are {"error": string, "violations": [{"field", "message"}]}.
Request handling is stateless; all pipeline stages are pure, so parallel
requests are safe and identical requests get identical responses.
"""

from __future__ import annotations

import argparse
import json
import mimetypes
import os
import sys
from dataclasses import dataclass
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from speedreader import __version__, pipeline
from speedreader.tokenizer import load_abbreviations
from speedreader.summarize import load_stopwords
from speedreader.typography import Violation

DEFAULT_PORT = 8080
DEFAULT_MAX_BODY = 1 << 20  # 1 MiB

_PLACEHOLDER_PAGE = """<!DOCTYPE html>
<html>
<head><meta charset="utf-8"><title>speedreader</title></head>
<body>
<h1>speedreader API</h1>
<p>The web UI bundle is not built. Available endpoints:</p>
<ul>
<li><code>POST /api/v1/process</code> &mdash; JSON body with <code>text</code>,
<code>summarize</code>, <code>ratio</code>, <code>format</code>,
<code>typography</code>, <code>bolding</code></li>
<li><code>GET /api/v1/health</code></li>
</ul>
</body>
</html>
"""


@dataclass(frozen=True)
class ServiceConfig:
    max_body_bytes: int = DEFAULT_MAX_BODY
    abbreviations: frozenset[str] | None = None
    stopwords: frozenset[str] | None = None
    cors_allow_origin: str | None = None
    static_dir: str | None = None


class _Handler(BaseHTTPRequestHandler):
    protocol_version = "HTTP/1.1"
    server_version = f"speedreader/{__version__}"

    # -- helpers ------------------------------------------------------------

    @property
    def config(self) -> ServiceConfig:
        return self.server.service_config  # type: ignore[attr-defined]

    def _send_bytes(self, status: int, payload: bytes, content_type: str) -> None:
        self.send_response(status)
        self.send_header("Content-Type", content_type)
        self.send_header("Content-Length", str(len(payload)))
        if self.config.cors_allow_origin:
            self.send_header("Access-Control-Allow-Origin", self.config.cors_allow_origin)
        self.end_headers()
        self.wfile.write(payload)

    def _send_json(self, status: int, obj) -> None:
        self._send_bytes(status, json.dumps(obj).encode("utf-8"), "application/json")

    def _send_error_json(self, status: int, message: str, violations=()) -> None:
        self._send_json(
            status,
            {
                "error": message,
                "violations": [{"field": v.field, "message": v.message} for v in violations],
            },
        )

    # -- routes -------------------------------------------------------------

    def do_POST(self) -> None:
        if self.path != "/api/v1/process":
            self._send_error_json(404, f"no such endpoint: {self.path}")
            return
        content_type = self.headers.get("Content-Type", "")
        if content_type.split(";")[0].strip().lower() != "application/json":
            self._send_error_json(400, "Content-Type must be application/json")
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
        except ValueError:
            length = -1
        if length <= 0:
            self._send_error_json(400, "request body required")
            return
        if length > self.config.max_body_bytes:
            self.close_connection = True
            self._send_error_json(
                413, f"body of {length} bytes exceeds limit of {self.config.max_body_bytes}"
            )
            return
        body = self.rfile.read(length)
        try:
            payload = json.loads(body)
        except json.JSONDecodeError as exc:
            self._send_error_json(400, f"malformed JSON: {exc}")
            return
        if not isinstance(payload, dict):
            self._send_error_json(
                422, "invalid request", [Violation("body", "request body must be a JSON object")]
            )
            return
        request, violations = pipeline.validate_request(payload)
        if violations:
            self._send_error_json(422, "invalid request", violations)
            return
        result = pipeline.process(
            request,
            abbreviations=self.config.abbreviations,
            stopwords=self.config.stopwords,
        )
        self._send_json(200, result.to_dict())

    def do_GET(self) -> None:
        if self.path == "/api/v1/health":
            self._send_json(200, {"status": "ok", "version": __version__})
            return
        self._serve_static(self.path)

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        if self.config.cors_allow_origin:
            self.send_header("Access-Control-Allow-Origin", self.config.cors_allow_origin)
            self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
            self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()

    def _serve_static(self, path: str) -> None:
        static_dir = self.config.static_dir
        relative = path.lstrip("/") or "index.html"
        if static_dir:
            root = os.path.realpath(static_dir)
            target = os.path.realpath(os.path.join(root, relative))
            # Refuse anything that escapes the static root.
            if target == root or target.startswith(root + os.sep):
                if os.path.isfile(target):
                    content_type = (
                        mimetypes.guess_type(target)[0] or "application/octet-stream"
                    )
                    with open(target, "rb") as fh:
                        self._send_bytes(200, fh.read(), content_type)
                    return
        if path == "/":
            self._send_bytes(200, _PLACEHOLDER_PAGE.encode("utf-8"), "text/html; charset=utf-8")
            return
        self._send_error_json(404, f"not found: {path}")

    def log_message(self, format: str, *args) -> None:  # noqa: A002 - stdlib signature
        pass  # keep the test/serve output quiet


def create_server(
    host: str = "127.0.0.1", port: int = 0, config: ServiceConfig = ServiceConfig()
) -> ThreadingHTTPServer:
    """Build a ready-to-run threaded server; port 0 picks a free port."""
    server = ThreadingHTTPServer((host, port), _Handler)
    server.service_config = config  # type: ignore[attr-defined]
    return server


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(
        prog="speedreader-serve", description="Serve the speed-reading pipeline over HTTP."
    )
    parser.add_argument("--host", default="127.0.0.1")
    parser.add_argument(
        "--port",
        type=int,
        default=int(os.environ.get("SRT_PORT", DEFAULT_PORT)),
        help="listen port (env SRT_PORT)",
    )
    parser.add_argument("--max-body-bytes", type=int, default=DEFAULT_MAX_BODY)
    parser.add_argument("--abbrev-file", help="override the abbreviation list")
    parser.add_argument("--stopword-file", help="override the stopword list")
    parser.add_argument("--cors-allow-origin", help="value for Access-Control-Allow-Origin")
    parser.add_argument(
        "--static-dir",
        help="directory with the built web UI (default: ./frontend/dist when present)",
    )
    args = parser.parse_args(argv)

    static_dir = args.static_dir
    if static_dir is None and os.path.isdir(os.path.join("frontend", "dist")):
        static_dir = os.path.join("frontend", "dist")

    config = ServiceConfig(
        max_body_bytes=args.max_body_bytes,
        abbreviations=load_abbreviations(args.abbrev_file) if args.abbrev_file else None,
        stopwords=load_stopwords(args.stopword_file) if args.stopword_file else None,
        cors_allow_origin=args.cors_allow_origin,
        static_dir=static_dir,
    )
    server = create_server(args.host, args.port, config)
    host, port = server.server_address[:2]
    print(f"speedreader listening on http://{host}:{port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return 0


if __name__ == "__main__":
    sys.exit(main())
