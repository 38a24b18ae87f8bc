"""Terminal summary for the acceptance gate.

Collects the outcome of each test in test_acceptance.py and prints one
pass/fail line per criterion after the run.
"""

CRITERIA = {
    "test_metric_identity_suite":
        "metric identity: micro P/R/F1 == accuracy exactly, weighted recall within 1e-12",
    "test_oracle_equivalence":
        "oracle equivalence: random bundles + exhaustive one-hot sweep match the reference",
    "test_weighted_vote_hand_fixture":
        "hand fixture: two-model weighted vote yields exact scores and label index 1",
    "test_invariance_suite":
        "invariance: scale, permutation, duplicate-model, one-hot reduction all exact",
    "test_nine_model_replay_grid":
        "replay grid: nine targets within 0.005, evaluate within 1e-12, grid matches oracle",
    "test_ensemble_gain_statistical_check":
        "ensemble gain: majority beats best individual by >= 0.05 at every pinned seed",
    "test_ingest_round_trip_and_malformed_corpus":
        "ingest: round trip is identity and every documented error variant triggers",
}

_outcomes = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    name = report.nodeid.rsplit("::", 1)[-1].split("[", 1)[0]
    if name in CRITERIA:
        _outcomes[name] = report.outcome


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not any(name in _outcomes for name in CRITERIA):
        return
    terminalreporter.section("acceptance criteria")
    for name, label in CRITERIA.items():
        outcome = _outcomes.get(name, "not run")
        word = {"passed": "PASS", "failed": "FAIL"}.get(outcome, outcome.upper())
        terminalreporter.write_line(f"{word}  {label}")
