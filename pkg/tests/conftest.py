import time
from pathlib import Path

import numpy as np
import pytest

from adtt.pgm import read_pgm
from adtt.sweep import SweepConfig, run_sweep

CORPUS_DIR = Path(__file__).resolve().parents[1] / "data"


def mse(a, b) -> float:
    """Mean squared error, internal test helper (not a reported metric)."""
    a = np.asarray(a, dtype=np.float64)
    b = np.asarray(b, dtype=np.float64)
    return float(np.mean((a - b) ** 2))


@pytest.fixture(scope="session")
def corpus():
    images = {p.stem: read_pgm(p) for p in sorted(CORPUS_DIR.glob("*.pgm"))}
    assert len(images) >= 3
    return images


@pytest.fixture(scope="session")
def camera(corpus):
    return corpus["camera"]


@pytest.fixture(scope="session")
def sweep_results(tmp_path_factory):
    """One full-corpus sweep (r 1..45, both kernels), shared by every test
    that needs the curves. Returns (records, config, elapsed seconds)."""
    out = tmp_path_factory.mktemp("sweep") / "records.csv"
    config = SweepConfig(corpus_dir=CORPUS_DIR, output=out, workers=2)
    start = time.perf_counter()
    records = run_sweep(config)
    return records, config, time.perf_counter() - start


def mean_curve(records, kernel_id, field):
    """Per-r corpus means of one metric for one kernel, as an r->mean dict."""
    groups = {}
    for rec in records:
        if rec.kernel_id == kernel_id:
            groups.setdefault(rec.r, []).append(getattr(rec, field))
    return {r: float(np.mean(v)) for r, v in sorted(groups.items())}
