"""Shared fixtures and markers."""

import numpy as np
import pytest

from src.core.archive import Archive, ArchiveEntry


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: desk-scale end-to-end runs (deselect with -m 'not slow')")


@pytest.fixture
def rng() -> np.random.Generator:
    """Seeded generator so property checks are reproducible."""
    return np.random.default_rng(12345)


@pytest.fixture
def make_archive():
    """Build an archive from objective vectors, one decision coordinate per entry."""
    def _make(objectives, radius: float = 1.0) -> Archive:
        archive = Archive()
        for i, f in enumerate(objectives):
            archive.insert(ArchiveEntry(x=[float(i)], f=f, radius=radius))
        return archive
    return _make
