"""One test per acceptance criterion; set SEMIREP_STRETCH=1 for the full profile."""

import os

import pytest

from semirep.acceptance import CRITERIA, FAIL, run_criterion

PROFILE = "full" if os.environ.get("SEMIREP_STRETCH") == "1" else "quick"
SEED = int(os.environ.get("SEMIREP_SEED", "20240601"))
LINES: list[str] = []


@pytest.mark.parametrize("number", [c[0] for c in CRITERIA], ids=[f"criterion_{c[0]:02d}" for c in CRITERIA])
def test_criterion(number):
    # criterion 2 is cheap enough to run on every invocation
    r = run_criterion(number, "full" if number == 2 else PROFILE, SEED)
    LINES.append(r.line())
    print(r.line())
    for c in r.checks:
        print("   ", c)
    assert r.status != FAIL, "\n".join(r.checks)
