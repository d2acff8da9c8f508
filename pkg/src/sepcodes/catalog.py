"""Deterministic graph catalogs for sweeps and exhaustive checks.

Small orders are enumerated exhaustively over all labeled graphs; larger
orders are sampled with a fixed seed so every run sees the same catalog.
"""

from __future__ import annotations

import itertools
import random

from .graphs import Graph, make_family

__all__ = ["all_graphs", "random_graph", "random_graphs", "small_graph_catalog"]


def all_graphs(n: int):
    """Every labeled graph on n vertices (2^C(n,2) of them)."""
    pairs = list(itertools.combinations(range(n), 2))
    for bits in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for i, p in enumerate(pairs) if bits >> i & 1])


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return Graph.from_edges(n, edges)


def random_graphs(count: int, min_n: int = 2, max_n: int = 9, seed: int = 20240901):
    """A reproducible stream of random graphs with varied size and density."""
    rng = random.Random(seed)
    densities = (0.2, 0.35, 0.5, 0.65, 0.8)
    out = []
    for i in range(count):
        n = rng.randint(min_n, max_n)
        out.append(random_graph(n, densities[i % len(densities)], rng))
    return out


def small_graph_catalog(seed: int = 20240901):
    """The catalog used by the verification sweeps.

    All labeled graphs on up to 5 vertices, seeded samples on 6..8
    vertices (deduplicated by edge set), and the named families.
    """
    graphs = []
    for n in range(1, 6):
        graphs.extend(all_graphs(n))
    rng = random.Random(seed)
    seen = set()
    for n, count in ((6, 220), (7, 110), (8, 110)):
        made = 0
        while made < count:
            g = random_graph(n, rng.choice((0.25, 0.4, 0.5, 0.6, 0.75)), rng)
            key = (n, tuple(g.edges()))
            if key in seen:
                continue
            seen.add(key)
            graphs.append(g)
            made += 1
    for n in range(3, 9):
        graphs.append(make_family("path", n))
        graphs.append(make_family("cycle", n))
        graphs.append(make_family("clique", n))
    for k in (2, 3, 4):
        graphs.append(make_family("thin_spider", k))
        graphs.append(make_family("thick_spider", k))
    graphs.append(make_family("star", 3))
    graphs.append(make_family("star", 5))
    return graphs
