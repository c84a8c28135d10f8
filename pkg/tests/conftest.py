import re

TITLES = {
    1: "IS_n six-fold sum equals the brute-force oracle (n = 2, 3, 4)",
    2: "IS_n cell multiplicities equal the oracle; closed form equals the count over m!",
    3: "matrix counting formulas equal orbit enumeration (k, l <= 4, bordered and not)",
    4: "point values of p, q and bordered p",
    5: "special stabilizers: hook, upper triangular, border-only",
    6: "I_n* orbit sum equals the brute-force oracle (n = 2, 3, 4)",
    7: "d -> d (x) d is multiplicative (n = 2 exhaustive, 1e5 random pairs at n = 3)",
    8: "P_2 cells and a tensor product without cell filtration",
    9: "first-row stability of grid restriction coefficients up to S_12",
    10: "character orthogonality, LR rule vs characters, Kronecker symmetry",
}

_OUTCOMES: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    match = re.search(r"test_criterion_(\d+)_\w+", report.nodeid)
    if not match:
        return
    number = int(match.group(1))
    failures = _OUTCOMES.setdefault(number, [])
    if report.when == "call" and report.outcome != "passed":
        failures.append(report.nodeid.split("::")[-1])
    elif report.when == "setup" and report.outcome != "passed":
        failures.append(report.nodeid.split("::")[-1])


def pytest_terminal_summary(terminalreporter):
    if not _OUTCOMES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_OUTCOMES):
        failures = _OUTCOMES[number]
        line = f"criterion {number:2d} {'FAIL' if failures else 'PASS'}: {TITLES.get(number, '')}"
        if failures:
            line += " [failing: " + ", ".join(failures) + "]"
        terminalreporter.write_line(line)
