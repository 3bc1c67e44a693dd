from __future__ import annotations

import json
from pathlib import Path

import pytest

from race_density.density import RunConfig, compute_all, load_tables

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def desk_tables():
    return load_tables(11, 2500.0)


@pytest.fixture(scope="session")
def paper_tables():
    return load_tables(11, 10000.0)


@pytest.fixture(scope="session")
def full_results(paper_tables):
    """All nine densities at the full profile (eps=0.2, C=100, T=10^4)."""
    tab, consts = paper_tables
    cfg = RunConfig(t_height=10000.0)
    return compute_all(cfg, tab, consts)


@pytest.fixture(scope="session")
def j0_fixture():
    return json.loads((FIXTURES / "j0_oracle.json").read_text())


@pytest.fixture(scope="session")
def erf_fixture():
    return json.loads((FIXTURES / "erf_oracle.json").read_text())


@pytest.fixture(scope="session")
def ft_fixture():
    return json.loads((FIXTURES / "ft_oracle.json").read_text())
