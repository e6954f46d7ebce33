import pytest

# criterion number -> list of (label, ok, detail), filled by test_acceptance
ACCEPTANCE: dict[int, list[tuple[str, bool, str]]] = {}


def record(num: int, label: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE.setdefault(num, []).append((label, bool(ok), detail))
    return ok


@pytest.fixture
def recorder():
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[num]
        ok = all(p[1] for p in parts)
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num:2d}: "
                                    + "; ".join(f"{l} {'ok' if o else 'FAILED'}{' (' + d + ')' if d else ''}"
                                                for l, o, d in parts))
