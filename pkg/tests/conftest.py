"""Shared fixtures.

The partition atlas and the kernel-dimension scan are the two expensive
artifacts; both are built once per session and their wall times are kept
so the acceptance tests can check the stated budgets.
"""

import time

import pytest

from pcl.partitions import build_atlas
from pcl.scan import KAPPA_WITNESSES, find_representatives, witness_code


@pytest.fixture(scope="session")
def atlas_build():
    t0 = time.monotonic()
    atlas = build_atlas()
    return atlas, time.monotonic() - t0


@pytest.fixture(scope="session")
def atlas(atlas_build):
    return atlas_build[0]


@pytest.fixture(scope="session")
def atlas_file(atlas, tmp_path_factory):
    path = tmp_path_factory.mktemp("atlas") / "atlas.json"
    atlas.save(str(path))
    return str(path)


@pytest.fixture(scope="session")
def found_build(atlas):
    t0 = time.monotonic()
    found = find_representatives(atlas, per_pair=400, seed=0)
    return found, time.monotonic() - t0


@pytest.fixture(scope="session")
def found(found_build):
    return found_build[0]


@pytest.fixture(scope="session")
def witnesses(atlas):
    return {k: witness_code(atlas, k) for k in KAPPA_WITNESSES}
