import sys


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Print the per-criterion verdict lines collected by the acceptance run."""
    mod = sys.modules.get("test_acceptance")
    verdicts = getattr(mod, "VERDICTS", None) if mod else None
    if verdicts:
        terminalreporter.section("acceptance criteria")
        for line in verdicts:
            terminalreporter.write_line(line)
