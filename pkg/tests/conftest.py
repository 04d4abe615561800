import json

import pytest

from src.harness import random_instance, trial_rng
from src.model import demo_instance, full_cc_time


@pytest.fixture
def demo():
    return demo_instance()


@pytest.fixture
def make_instance():
    """Seeded Gaussian-channel instance; ``budget_fraction`` scales T_lim against the full CC time."""

    def _make(k, t, seed, budget_fraction=None, t_lim=0.0):
        rng = trial_rng(seed, k, t, 0)
        instance = random_instance(k, t, t_lim, rng)
        if budget_fraction is not None:
            instance = instance.with_budget(budget_fraction * full_cc_time(instance))
        return instance

    return _make


@pytest.fixture
def write_json(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return path

    return _write
