import json
import logging

import pytest

from structctrl.core.pattern import Pattern


@pytest.fixture
def path_pattern():
    """道 1-2-3 と破線辺 (1,4): 可制御"""
    return Pattern.from_pairs(3, [(1, 2), (2, 3), (1, 4)])


@pytest.fixture
def disconnected_pattern():
    """実線部分が非連結: 可制御でない"""
    return Pattern.from_pairs(3, [(1, 4), (3, 4), (1, 2)])


@pytest.fixture
def write_json(tmp_path):
    def write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload), encoding="utf-8")
        return str(path)
    return write


@pytest.fixture
def worked_costs_document():
    return {"n": 3, "costs": [[1, 2, 1.0], [1, 3, 5.0], [2, 3, 2.0], [1, 4, 3.0], [2, 4, 1.0], [3, 4, 4.0]]}


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch):
    for key in ("SEED", "TOL", "TRIALS", "WORKERS", "LOG_DIR", "VERBOSE"):
        monkeypatch.delenv(f"STRUCTCTRL_{key}", raising=False)


@pytest.fixture(autouse=True)
def reset_package_logger():
    yield
    logger = logging.getLogger("structctrl")
    for handler in logger.handlers[:]:
        handler.close()
        logger.removeHandler(handler)
    logger.propagate = True
    logger.setLevel(logging.NOTSET)
