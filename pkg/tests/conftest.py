"""Shared fixtures: orbits and generated class sets are expensive, so they
are computed once per session and reused by the unit and acceptance tests."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from colq.classify import generate_all_members
from colq.orbit import mutation_class
from colq.quiver import standard_d_quiver

from quivers import path_quiver


@pytest.fixture(scope="session")
def orbit_d41():
    return mutation_class(standard_d_quiver(4, 1))


@pytest.fixture(scope="session")
def orbit_d42():
    return mutation_class(standard_d_quiver(4, 2))


@pytest.fixture(scope="session")
def orbit_d51():
    return mutation_class(standard_d_quiver(5, 1))


@pytest.fixture(scope="session")
def orbit_d52():
    return mutation_class(standard_d_quiver(5, 2))


@pytest.fixture(scope="session")
def d_orbits(orbit_d41, orbit_d42, orbit_d51):
    return {(4, 1): orbit_d41, (4, 2): orbit_d42, (5, 1): orbit_d51}


@pytest.fixture(scope="session")
def generated_members():
    out = {}
    for n, m in [(4, 1), (4, 2), (5, 1)]:
        keys, reps = generate_all_members(n, m, collect_reps=True)
        out[(n, m)] = (keys, reps)
    return out


@pytest.fixture(scope="session")
def a_orbits():
    out = {}
    for n in (4, 5):
        for m in (1, 2):
            out[(n, m)] = mutation_class(path_quiver(n, m))
    return out
