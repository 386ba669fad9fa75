import pytest

from fatpoints.oracle import OracleConfig


@pytest.fixture(scope="session")
def oracle():
    """Default-configured oracle shared by the suite."""
    return OracleConfig()


@pytest.fixture(scope="session")
def fast_oracle():
    """Single-trial oracle for bulk scans where a single trial suffices."""
    return OracleConfig(trials=1)
