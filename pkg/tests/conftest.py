"""
Pytest configuration for the dendro-segal toolkit test suite.

Registers the hypothesis profiles and puts the workspace root on sys.path so
that the tests run from a plain checkout.
"""

import os
import sys
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

WORKSPACE_ROOT = Path(__file__).parent.parent
if str(WORKSPACE_ROOT) not in sys.path:
    sys.path.insert(0, str(WORKSPACE_ROOT))

settings.register_profile(
    "dev",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("ci", max_examples=100, deadline=None)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "dev"))


@pytest.fixture
def output_dir(tmp_path, monkeypatch):
    """Point DST_OUTPUT_DIR at a temporary directory."""
    monkeypatch.setenv("DST_OUTPUT_DIR", str(tmp_path))
    return tmp_path
