from pathlib import Path

import pytest

from opaqcheck import parse_model

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


@pytest.fixture(scope="session")
def fixtures_dir():
    return FIXTURES


@pytest.fixture(scope="session")
def downgrade_loop():
    return parse_model((FIXTURES / "downgrade_loop.lts").read_text())


@pytest.fixture(scope="session")
def projection_leak():
    return parse_model((FIXTURES / "projection_leak.lts").read_text())


@pytest.fixture(scope="session")
def hdl_chain():
    return parse_model((FIXTURES / "hdl_chain.lts").read_text())
