"""Symmetric-difference families, separation/code hypergraphs, and numbers.

Two deliberately redundant routes are exposed: membership tests work from
the neighborhood definitions, while the numbers are computed as covering
numbers of the hypergraphs built from symmetric-difference families.  Their
agreement is the executable form of the hypergraph characterization.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, closed_neighborhood, open_neighborhood
from .hypergraphs import CoverResult, Hypergraph, covering_number, covering_number_at_most
from .kinds import CODE_KINDS, DOMINATION_KINDS, SEPARATION_KINDS, split_code_kind

__all__ = [
    "DeltaFamilies",
    "delta_families",
    "separation_hypergraph",
    "code_hypergraph",
    "is_s_set",
    "is_x_code",
    "s_number",
    "s_number_at_most",
    "x_number",
    "s_number_bruteforce",
    "x_number_bruteforce",
    "number",
    "BRUTEFORCE_GRAPH_GUARD",
]

BRUTEFORCE_GRAPH_GUARD = 16


@dataclass(frozen=True)
class DeltaFamilies:
    """Symmetric differences of neighborhoods over all vertex pairs,
    partitioned by adjacency.

    Each entry is ((u, v), difference) with u < v.  adj_* ranges over edges,
    nonadj_* over non-edges; open/closed refers to the neighborhoods used.
    """

    adj_open: tuple
    adj_closed: tuple
    nonadj_open: tuple
    nonadj_closed: tuple


def delta_families(g: Graph) -> DeltaFamilies:
    adj_o, adj_c, non_o, non_c = [], [], [], []
    for u, v in itertools.combinations(range(g.n), 2):
        no = open_neighborhood(g, u) ^ open_neighborhood(g, v)
        nc = closed_neighborhood(g, u) ^ closed_neighborhood(g, v)
        if g.has_edge(u, v):
            adj_o.append(((u, v), no))
            adj_c.append(((u, v), nc))
        else:
            non_o.append(((u, v), no))
            non_c.append(((u, v), nc))
    return DeltaFamilies(tuple(adj_o), tuple(adj_c), tuple(non_o), tuple(non_c))


# Hyperedge recipe per separation kind: (adjacent family, non-adjacent family),
# each "open" or "closed".
_SEP_RECIPE = {
    "L": ("open", "closed"),
    "O": ("open", "open"),
    "I": ("closed", "closed"),
    "F": ("closed", "open"),
}


def separation_hypergraph(g: Graph, s: str) -> Hypergraph:
    """Raw hypergraph whose covers are exactly the s-separating sets.

    One hyperedge per vertex pair; clutter reduction happens inside the
    solver so the construction stays auditable against the definitions.
    """
    if s not in SEPARATION_KINDS:
        raise ValueError("unknown separation kind %r" % s)
    fams = delta_families(g)
    adj_kind, non_kind = _SEP_RECIPE[s]
    adj = fams.adj_open if adj_kind == "open" else fams.adj_closed
    non = fams.nonadj_open if non_kind == "open" else fams.nonadj_closed
    edges = [d for _, d in adj] + [d for _, d in non]
    return Hypergraph(g.n, tuple(edges))


def code_hypergraph(g: Graph, kind: str) -> Hypergraph:
    """Hypergraph whose covers are the codes of the given kind.

    Domination contributes the closed neighborhoods (D) or the open
    neighborhoods (TD); a combined kind adds the separation hyperedges.
    """
    sep, dom = split_code_kind(kind)
    edges = []
    if sep is not None:
        edges.extend(separation_hypergraph(g, sep).edges)
    if dom is not None:
        if dom == "D":
            edges.extend(closed_neighborhood(g, v) for v in range(g.n))
        else:
            edges.extend(open_neighborhood(g, v) for v in range(g.n))
    return Hypergraph(g.n, tuple(edges))


def is_s_set(g: Graph, s: str, c: frozenset[int]) -> bool:
    """Definition-based membership test (not via hypergraphs).

    Intersections are compared by value; the empty set counts as a value, so
    two vertices both meeting c in the empty set violate separation.
    """
    if s not in SEPARATION_KINDS:
        raise ValueError("unknown separation kind %r" % s)
    c = frozenset(c)
    if s in ("O", "F"):
        traces = [open_neighborhood(g, v) & c for v in range(g.n)]
        if len(set(traces)) != g.n:
            return False
        if s == "O":
            return True
    if s in ("I", "F"):
        traces = [closed_neighborhood(g, v) & c for v in range(g.n)]
        return len(set(traces)) == g.n
    # L: uniqueness only over vertices outside c
    outside = [v for v in range(g.n) if v not in c]
    traces = [open_neighborhood(g, v) & c for v in outside]
    return len(set(traces)) == len(outside)


def _dominates(g: Graph, dom: str, c: frozenset[int]) -> bool:
    if dom == "D":
        return all(closed_neighborhood(g, v) & c for v in range(g.n))
    return all(open_neighborhood(g, v) & c for v in range(g.n))


def is_x_code(g: Graph, kind: str, c: frozenset[int]) -> bool:
    """Definition check: domination condition plus separation condition."""
    sep, dom = split_code_kind(kind)
    c = frozenset(c)
    if dom is not None and not _dominates(g, dom, c):
        return False
    if sep is not None and not is_s_set(g, sep, c):
        return False
    return True


def s_number(g: Graph, s: str) -> CoverResult:
    """Minimum s-separating set via the covering reformulation.

    Infeasible exactly when the graph has the corresponding twins.
    """
    return covering_number(separation_hypergraph(g, s))


def s_number_at_most(g: Graph, s: str, budget: int) -> bool:
    """Decide whether an s-separating set of size <= budget exists."""
    return covering_number_at_most(separation_hypergraph(g, s), budget)


def x_number(g: Graph, kind: str) -> CoverResult:
    """Minimum code of the given kind via the covering reformulation."""
    return covering_number(code_hypergraph(g, kind))


def number(g: Graph, kind: str) -> CoverResult:
    """Dispatch: separation kinds go to s_number, code kinds to x_number."""
    if kind in SEPARATION_KINDS:
        return s_number(g, kind)
    if kind in DOMINATION_KINDS or kind in CODE_KINDS:
        return x_number(g, kind)
    raise ValueError("unknown kind %r" % kind)


def _bruteforce_min(g: Graph, accept) -> CoverResult:
    if g.n > BRUTEFORCE_GRAPH_GUARD:
        raise ValueError(
            "graph size %d over brute-force guard %d" % (g.n, BRUTEFORCE_GRAPH_GUARD)
        )
    for size in range(g.n + 1):
        for combo in itertools.combinations(range(g.n), size):
            c = frozenset(combo)
            if accept(c):
                return CoverResult(True, size, c)
    return CoverResult(False, None, None)


def s_number_bruteforce(g: Graph, s: str) -> CoverResult:
    """Independent oracle: size-then-lex subset enumeration against the
    neighborhood definitions.  Agreement with s_number on every input is the
    executable proof of the hypergraph characterization."""
    return _bruteforce_min(g, lambda c: is_s_set(g, s, c))


def x_number_bruteforce(g: Graph, kind: str) -> CoverResult:
    """Brute-force oracle for code numbers, same enumeration order."""
    return _bruteforce_min(g, lambda c: is_x_code(g, kind, c))
