"""One test per acceptance criterion; each prints a PASS/FAIL line.

The lines are also repeated in the terminal summary (see conftest.py) so
they show up without -s.
"""

from __future__ import annotations

import pytest

from gtdegen.verify import CRITERIA

RESULTS: dict = {}


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k):
    passed, details = CRITERIA[k]()
    line = f"criterion {k}: {'PASS' if passed else 'FAIL'} ({details.get('seconds')} s)"
    RESULTS[k] = line
    print(line)
    assert passed, details
