from pathlib import Path

import pytest

from strquiv import parse_quiver

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load(name: str):
    return parse_quiver((FIXTURES / name).read_text())


@pytest.fixture(scope="session")
def fig1():
    return load("fig1.quiver")


@pytest.fixture(scope="session")
def fig5():
    return load("fig5.quiver")


@pytest.fixture(scope="session")
def fig4_expected():
    return load("fig4.expected")


@pytest.fixture(scope="session")
def fig6_expected():
    return load("fig6.expected")
