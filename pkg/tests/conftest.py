"""Echo one pass/fail line per acceptance test in the terminal summary."""

ACCEPTANCE_LABELS = {
    "test_semiring_axioms_bulk":
        "semiring axioms on 10000 random triples",
    "test_essential_and_closure_preserve_function":
        "essential part and full closure preserve the function",
    "test_pinned_identities":
        "pinned polynomial identities",
    "test_factorization_round_trips":
        "factor / expand / refactor round trips",
    "test_root_construction_bulk":
        "constructive roots on 1000 random polynomials",
    "test_frobenius_and_termwise_powers":
        "power identities for reduced polynomials",
    "test_zero_set_laws_on_grids":
        "zero sets of products, sums and powers",
    "test_complement_components_vs_sampling":
        "complement components against dense sampling",
    "test_nullstellensatz_procedures":
        "nullstellensatz witnesses and radical certificates",
    "test_syntax_round_trip_and_fuzz":
        "parser round trips and fuzzing",
}

_results = {}


def pytest_runtest_logreport(report):
    if report.when != "call" or "test_acceptance" not in report.nodeid:
        return
    name = report.nodeid.rsplit("::", 1)[-1]
    if name in ACCEPTANCE_LABELS:
        _results[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _results:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("acceptance criteria:")
    for i, (name, label) in enumerate(ACCEPTANCE_LABELS.items(), 1):
        outcome = _results.get(name)
        if outcome is None:
            continue
        verdict = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"  [{i:2d}] {label}: {verdict}")
