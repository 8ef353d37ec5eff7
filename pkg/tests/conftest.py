import sys
from functools import lru_cache

import pytest

from coxcliques.cayley import full_group
from coxcliques.coxeter import parse_preset
from coxcliques.oracle import model_for, oracle_group_graph


@lru_cache(maxsize=None)
def system(name):
    return parse_preset(name)


@lru_cache(maxsize=None)
def group(name):
    return full_group(system(name))


@lru_cache(maxsize=None)
def oracle(name):
    model = model_for(name)
    return model, oracle_group_graph(model)


def to_model(model, element):
    """Evaluate an engine element's word in an oracle model."""
    return model.evaluate(element.word)


@pytest.fixture
def sys_of():
    return system


@pytest.fixture
def group_of():
    return group


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.REPORT, key=lambda s: int(s.split()[1])):
        terminalreporter.write_line(line)
