"""Shared test fixtures: the seed corpus, independent oracles, and strategies."""

from __future__ import annotations

from itertools import combinations

from hypothesis import strategies as st

from trispectral.graph import Graph, generate


def corpus() -> dict[str, Graph]:
    """The named seed graphs exercised throughout the suite."""
    return {
        "K2": generate("complete", 2),
        "K3": generate("complete", 3),
        "K4": generate("complete", 4),
        "P3": generate("path", 3),
        "P4": generate("path", 4),
        "C4": generate("cycle", 4),
        "C5": generate("cycle", 5),
        "S5": generate("star", 5),
        "petersen": generate("petersen", 10),
    }


def brute_force_spanning_trees(g: Graph) -> int:
    """Count spanning trees by enumerating all (N-1)-edge subsets."""
    n = g.num_vertices
    count = 0
    for subset in combinations(g.edges, n - 1):
        parent = list(range(n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        acyclic = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                acyclic = False
                break
            parent[ru] = rv
        if acyclic:
            count += 1
    return count


@st.composite
def connected_graphs(draw, max_vertices: int = 10, max_extra_edges: int = 6) -> Graph:
    """Random connected simple graph: a random tree plus a few extra edges."""
    n = draw(st.integers(min_value=2, max_value=max_vertices))
    edges = set()
    for child in range(1, n):
        parent = draw(st.integers(min_value=0, max_value=child - 1))
        edges.add((parent, child))
    extra = draw(
        st.lists(
            st.tuples(
                st.integers(min_value=0, max_value=n - 1),
                st.integers(min_value=0, max_value=n - 1),
            ),
            max_size=max_extra_edges,
        )
    )
    for u, v in extra:
        if u != v:
            edges.add((min(u, v), max(u, v)))
    return Graph.from_edges(sorted(edges), num_vertices=n)
