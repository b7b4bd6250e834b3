"""Collects acceptance results so the terminal summary can list them in order."""

ACCEPTANCE_RESULTS: dict = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    from dpcount.claims import ACCEPTANCE_ORDER

    terminalreporter.section("acceptance criteria")
    for n, cid in enumerate(ACCEPTANCE_ORDER, start=1):
        if cid not in ACCEPTANCE_RESULTS:
            terminalreporter.write_line(f"{n:2d}. SKIP {cid}")
            continue
        res, budget = ACCEPTANCE_RESULTS[cid]
        ok = res.passed and res.wall_time <= budget
        terminalreporter.write_line(
            f"{n:2d}. {'PASS' if ok else 'FAIL'} {cid} ({res.wall_time:.2f}s, budget {budget:g}s):"
            f" expected {res.expected}; observed {res.observed}")
