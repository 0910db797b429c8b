from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def fixture_two():
    return FIXTURES / "two"


@pytest.fixture(scope="session")
def fixture_three():
    return FIXTURES / "three"


@pytest.fixture(scope="session")
def exporter_sample():
    return FIXTURES / "exporter_sample"


@pytest.fixture()
def two_config(fixture_two, tmp_path):
    """The two-language run config, writing into tmp_path."""
    from lexintel.config import load_run_config

    config = load_run_config(fixture_two / "config.ini")
    config.output_dir = tmp_path / "out"
    return config
