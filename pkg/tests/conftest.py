from __future__ import annotations

import pytest

from jrainbow import FamilySpec, Graph, enumerate_graphs, generate


def family(kind: str, *params: int, parts=()) -> Graph:
    return generate(FamilySpec(kind, tuple(params), parts=tuple(parts)))


def union(*specs: FamilySpec) -> Graph:
    return generate(FamilySpec("disjoint_union", parts=tuple(specs)))


@pytest.fixture(scope="session")
def all_graphs_to_5() -> list[Graph]:
    return [g for n in range(1, 6) for g in enumerate_graphs(n)]


@pytest.fixture(scope="session")
def all_graphs_to_6() -> list[Graph]:
    return [g for n in range(1, 7) for g in enumerate_graphs(n)]


@pytest.fixture(scope="session")
def connected_to_6() -> list[Graph]:
    return [g for n in range(1, 7) for g in enumerate_graphs(n, connected_only=True)]
