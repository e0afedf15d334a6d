"""Access to the bundled fixture corpus (small plane graphs used in tests
and demos: cycles, K4, the theta graphs, K2,3, Q7 and the cube)."""

from __future__ import annotations

import importlib.resources
from pathlib import Path

from . import graphio
from .plane import PlaneGraph

FIXTURE_NAMES = (
    "c4",
    "c6",
    "c8",
    "k4",
    "theta4",
    "k23",
    "theta6",
    "q7",
    "cube",
)


def fixture_text(name: str) -> str:
    if name not in FIXTURE_NAMES:
        raise KeyError(f"unknown fixture {name!r}; choose from {FIXTURE_NAMES}")
    ref = importlib.resources.files(__package__) / "fixtures" / f"{name}.graph"
    return ref.read_text()


def load_fixture(name: str) -> PlaneGraph:
    return graphio.parse_graph(fixture_text(name))


def write_all(directory: str | Path) -> list[Path]:
    """Write the whole corpus as .graph files; returns the paths written."""
    directory = Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    written = []
    for name in FIXTURE_NAMES:
        path = directory / f"{name}.graph"
        path.write_text(fixture_text(name))
        written.append(path)
    return written
