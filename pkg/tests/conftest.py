"""Shared builders: root data, affine Weyl groups, Frobenius actions and checker configs."""

import pytest

from src.affine.group import affine_group
from src.affine.notation import parse_elem
from src.lab.config import CheckerConfig
from src.rootdata.parse import build_root_datum
from src.sigma.frobenius import make_frobenius


def make_group(spec: str):
    return affine_group(build_root_datum(spec))


def make_sigma(spec: str, sigma: str = "id"):
    return make_frobenius(make_group(spec), sigma)


def elem(group, text: str):
    return parse_elem(group, text)


def tiny_config(lemma_id: str, **overrides) -> CheckerConfig:
    data = {
        "lemma_id": lemma_id,
        "datum": "A1",
        "sigma": "id",
        "max_height": 2,
        "length_bound": 3,
        "instance_cap": 50_000,
    }
    data.update(overrides)
    return CheckerConfig.from_dict(data)


@pytest.fixture
def a1():
    return make_group("A1")


@pytest.fixture
def a2():
    return make_group("A2")


@pytest.fixture
def a2_id():
    return make_sigma("A2")


@pytest.fixture
def a2_flip():
    return make_sigma("A2", "flip")


@pytest.fixture
def a1_id():
    return make_sigma("A1")


@pytest.fixture
def a1xa1_swap():
    return make_sigma("A1xA1", "swap")


@pytest.fixture
def no_pool(monkeypatch):
    """Keep sweeps in-process."""
    monkeypatch.setenv("ADLV_THREADS", "1")
