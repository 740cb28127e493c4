"""Shared fixtures: validated corpus fans (cached at module scope)."""

import pytest

from toricstab.workbench import load_builtin_fan


@pytest.fixture(scope="session")
def p123():
    return load_builtin_fan("P(1,2,3)")


@pytest.fixture(scope="session")
def p1():
    return load_builtin_fan("P1")


@pytest.fixture(scope="session")
def p2():
    return load_builtin_fan("P2")


@pytest.fixture(scope="session")
def p3():
    return load_builtin_fan("P3")


@pytest.fixture(scope="session")
def square(request):
    return load_builtin_fan("P1xP1")


@pytest.fixture(scope="session")
def cube():
    return load_builtin_fan("P1xP1xP1")


@pytest.fixture(scope="session")
def dp8():
    return load_builtin_fan("dP8")


@pytest.fixture(scope="session")
def corpus_fans():
    from toricstab.corpus import builtin_fan_specs

    return [load_builtin_fan(name) for name in builtin_fan_specs()]
