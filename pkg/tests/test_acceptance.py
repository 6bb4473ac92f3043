"""The ten acceptance criteria, each at exact tolerance.

Every criterion prints one PASS/FAIL line to the terminal (pytest output
capture is bypassed for it). Also runnable directly:
``python3 tests/test_acceptance.py``.
"""
import sys

import pytest

from stabmult.evaluator import Evaluator
from stabmult.verify import CRITERIA, Outcome, run_suite

_EVALUATOR = Evaluator(jobs=1)


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{c.number:02d}" for c in CRITERIA])
def test_criterion(criterion, capsys):
    passed, detail = criterion.check(_EVALUATOR)
    with capsys.disabled():
        print("\n" + Outcome(criterion, passed, detail, 0).line().rsplit(" [", 1)[0])
    assert passed, detail


if __name__ == "__main__":
    results = run_suite("full", Evaluator(), echo=print)
    sys.exit(0 if all(o.passed for o in results) else 1)
