from oracles import ACCEPTANCE_LOG


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LOG:
        return
    terminalreporter.section("acceptance criteria")
    for number, name, ok, seconds, limit, detail in sorted(ACCEPTANCE_LOG):
        terminalreporter.write_line(
            f"[{'PASS' if ok else 'FAIL'}] {number:2d} {name}: {detail} ({seconds:.1f}s / {limit}s)"
        )
