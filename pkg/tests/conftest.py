import os
from pathlib import Path

import pytest

from cyclerank.graph import build_graph, parse_edge_list

REPO_ROOT = Path(__file__).resolve().parent.parent


def graph_from_text(text):
    return parse_edge_list(text)


def triangle():
    return parse_edge_list("a b\nb c\nc a")


def path_graph(k):
    return parse_edge_list("\n".join(f"n{i:02d} n{i + 1:02d}" for i in range(k - 1)))


def cycle_graph(k):
    return parse_edge_list(
        "\n".join(f"n{i:02d} n{(i + 1) % k:02d}" for i in range(k)))


def star_graph(leaves):
    return parse_edge_list("\n".join(f"c l{i:02d}" for i in range(leaves)))


def complete_graph(k):
    return parse_edge_list(
        "\n".join(f"n{i} n{j}" for i in range(k) for j in range(i + 1, k)))


def two_triangles_shared():
    """Triangles {x,a,b} and {x,c,d} sharing only node x (id 0)."""
    return parse_edge_list("x a\na b\nb x\nx c\nc d\nd x")


def lollipop():
    """Triangle with a two-edge tail; the far tail node is on no cycle."""
    return parse_edge_list("a b\nb c\nc a\nc d\nd e")


@pytest.fixture
def dataset_dir():
    env = os.environ.get("CYCLERANK_DATA_DIR")
    path = Path(env) if env else REPO_ROOT / "data"
    return path


def require_dataset(dataset_dir, name):
    path = dataset_dir / f"{name}.edges"
    if not path.is_file():
        pytest.skip(f"dataset {name} not fetched "
                    f"(scripts/fetch_datasets.py --dest {dataset_dir})")
    return path


__all__ = [
    "graph_from_text", "triangle", "path_graph", "cycle_graph", "star_graph",
    "complete_graph", "two_triangles_shared", "lollipop", "build_graph",
    "require_dataset",
]
