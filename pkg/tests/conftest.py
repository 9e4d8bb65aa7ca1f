import threading
import time

import pytest

from speedreader.service import ServiceConfig, create_server

SESSION_START = time.monotonic()


def session_elapsed() -> float:
    return time.monotonic() - SESSION_START


def pytest_configure(config):
    config.addinivalue_line(
        "markers",
        "criterion(name): label a test as one acceptance criterion; the name is "
        "echoed with PASS/FAIL in the terminal summary",
    )


def pytest_collection_modifyitems(config, items):
    # Acceptance runs last so its runtime check covers the whole suite.
    items.sort(key=lambda item: item.path.name == "test_acceptance.py")
    config._criteria = [
        (item.nodeid, item.get_closest_marker("criterion").args[0])
        for item in items
        if item.get_closest_marker("criterion") is not None
    ]


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    criteria = getattr(config, "_criteria", [])
    if not criteria:
        return
    outcomes = {}
    for status in ("passed", "failed", "error"):
        for report in terminalreporter.stats.get(status, []):
            if getattr(report, "when", "call") == "call" or status == "error":
                outcomes[report.nodeid] = "PASS" if status == "passed" else "FAIL"
    terminalreporter.write_sep("=", "acceptance criteria")
    for nodeid, name in criteria:
        outcome = outcomes.get(nodeid, "FAIL (not run)")
        terminalreporter.write_line(f"[{outcome}] {name}")


def _start(config: ServiceConfig | None = None):
    httpd = create_server("127.0.0.1", 0, config or ServiceConfig())
    thread = threading.Thread(target=httpd.serve_forever, daemon=True)
    thread.start()
    return httpd


def _stop(httpd):
    httpd.shutdown()
    httpd.server_close()


@pytest.fixture(scope="session")
def server():
    """A live service on an ephemeral port, shared across tests."""
    httpd = _start()
    yield f"http://127.0.0.1:{httpd.server_address[1]}"
    _stop(httpd)


@pytest.fixture()
def small_body_server():
    """Service with a tiny request cap, for oversize-body tests."""
    httpd = _start(ServiceConfig(max_body_bytes=4096))
    yield f"http://127.0.0.1:{httpd.server_address[1]}"
    _stop(httpd)


@pytest.fixture()
def static_server(tmp_path):
    """Service pointed at a temporary static bundle directory."""
    (tmp_path / "index.html").write_text("<h1>bundle index</h1>", encoding="utf-8")
    (tmp_path / "app.js").write_text("console.log('ok');", encoding="utf-8")
    httpd = _start(ServiceConfig(static_dir=str(tmp_path)))
    yield f"http://127.0.0.1:{httpd.server_address[1]}", tmp_path
    _stop(httpd)


@pytest.fixture()
def cors_server():
    httpd = _start(ServiceConfig(cors_allow_origin="*"))
    yield f"http://127.0.0.1:{httpd.server_address[1]}"
    _stop(httpd)
