"""All acceptance criteria; one pass/fail line per criterion is printed in the
terminal summary (and on stdout when run as a script)."""

import pytest

from sextactic.checks import CHECKS, run_check


def _line(res) -> str:
    status = "PASS" if res.passed else "FAIL"
    return f"criterion {res.number:2d} [{res.anchor}] {status}: {res.title}"


@pytest.mark.parametrize("check", CHECKS, ids=[f"{c.number:02d}-{c.anchor}" for c in CHECKS])
def test_criterion(check, slow, acceptance_log):
    res = run_check(check, slow=slow)
    acceptance_log.append(_line(res))
    print(_line(res))
    failed = [(label, detail) for label, ok, detail in res.items if not ok]
    assert res.error is None, res.error
    assert res.items
    assert not failed, failed


if __name__ == "__main__":
    import sys

    results = [run_check(c, slow="--slow" in sys.argv) for c in CHECKS]
    for r in results:
        print(_line(r))
    sys.exit(0 if all(r.passed for r in results) else 1)
