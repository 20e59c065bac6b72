from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from halfsign.flagship import DEFAULT_PREC, flagship_form, ramanujan_delta


@pytest.fixture(scope="session")
def flagship():
    """The verified flagship form at full precision (built once per session)."""
    return flagship_form(DEFAULT_PREC)


@pytest.fixture(scope="session")
def delta():
    """eta(z)^24 up to q^100; coefficient n is tau(n)."""
    return ramanujan_delta(100)
