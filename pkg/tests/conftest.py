from contextlib import contextmanager

import pytest

_RESULTS = pytest.StashKey[list]()


def pytest_configure(config):
    config.stash[_RESULTS] = []


@pytest.fixture
def criterion(request):
    """Context manager recording one acceptance line; failures re-raise."""
    results = request.config.stash[_RESULTS]

    @contextmanager
    def record(label: str, title: str):
        rec = {"label": label, "title": title, "detail": "", "ok": False}
        try:
            yield rec
            rec["ok"] = True
        except BaseException as exc:
            rec["detail"] = rec["detail"] or f"{type(exc).__name__}: {exc}".splitlines()[0]
            raise
        finally:
            results.append(rec)

    return record


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(_RESULTS, [])
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for rec in sorted(results, key=lambda r: (len(r["label"]), r["label"])):
        status = "PASS" if rec["ok"] else "FAIL"
        terminalreporter.write_line(f"criterion {rec['label']}: {status} {rec['title']} | {rec['detail']}")
