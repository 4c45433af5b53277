"""Cycles of the quotient graph and the growth polytope.

A cycle is a closed edge walk whose intermediate target classes are
pairwise distinct, taken up to rotation; loops are length-1 cycles and
parallel edges give distinct cycles.  The normalization nu(q) divides the
translation vector of q by its weight; the growth polytope is the convex
hull of the nu image together with the origin.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .geometry import convex_hull
from .quotient import QuotientGraph, ResourceLimit, closed_walk_vector


@dataclass(frozen=True)
class Cycle:
    edge_indices: tuple   # rotation starting at the minimal class on the cycle
    classes: frozenset    # classes visited
    vector: tuple         # total translation vector
    weight: int

    def nu(self):
        return tuple(Fraction(x, self.weight) for x in self.vector)


def enumerate_cycles(graph: QuotientGraph, max_cycles=1_000_000):
    """All cycles up to rotation.

    Each cycle visits pairwise distinct classes, so it has a unique rotation
    whose start class is minimal; the search emits exactly that rotation by
    only walking to intermediate classes larger than the start.
    """
    cycles = []
    for start in range(graph.num_classes):
        stack = [((), start)]
        while stack:
            path, cur = stack.pop()
            for i, e in graph.out_edges(cur):
                if e.tgt == start:
                    total = [0] * graph.rank
                    weight = 0
                    classes = {start}
                    for j in path + (i,):
                        ej = graph.edges[j]
                        total = [a + b for a, b in zip(total, ej.vector)]
                        weight += ej.weight
                        classes.add(ej.tgt)
                    cycles.append(Cycle(path + (i,), frozenset(classes),
                                        tuple(total), weight))
                    if len(cycles) > max_cycles:
                        raise ResourceLimit(
                            f"cycle enumeration exceeded {max_cycles} cycles")
                elif e.tgt > start:
                    seen = {graph.edges[j].tgt for j in path}
                    if e.tgt not in seen:
                        stack.append((path + (i,), e.tgt))
    cycles.sort(key=lambda c: (len(c.edge_indices), c.edge_indices))
    return cycles


def nu(graph: QuotientGraph, edge_indices) -> tuple:
    vec = closed_walk_vector(graph, edge_indices)
    w = sum(graph.edges[i].weight for i in edge_indices)
    return tuple(Fraction(x, w) for x in vec)


def nu_image(graph: QuotientGraph, cycles=None, max_cycles=1_000_000):
    """Map nu point -> list of cycles attaining it (sorted by weight)."""
    if cycles is None:
        cycles = enumerate_cycles(graph, max_cycles=max_cycles)
    image = {}
    for c in cycles:
        image.setdefault(c.nu(), []).append(c)
    for lst in image.values():
        lst.sort(key=lambda c: (c.weight, c.edge_indices))
    return image


def growth_polytope(graph: QuotientGraph, cycles=None, max_cycles=1_000_000):
    """conv(nu image together with the origin); may be lower-dimensional."""
    if cycles is None:
        cycles = enumerate_cycles(graph, max_cycles=max_cycles)
    points = [c.nu() for c in cycles]
    points.append(tuple(Fraction(0) for _ in range(graph.rank)))
    return convex_hull(points)


@dataclass(frozen=True)
class PInitialData:
    """For each nonzero polytope vertex: the qualifying minimal-weight cycle.

    ``witnesses`` maps vertex -> (d_v, Cycle) where the cycle passes through
    the reference class and has nu equal to the vertex; d_v is its weight.
    ``missing`` lists vertices with no such cycle.
    """

    cls: int
    witnesses: dict
    missing: tuple

    @property
    def is_p_initial(self):
        return not self.missing


def p_initial_data(graph: QuotientGraph, cls: int, cycles=None,
                   polytope=None, max_cycles=1_000_000) -> PInitialData:
    if cycles is None:
        cycles = enumerate_cycles(graph, max_cycles=max_cycles)
    if polytope is None:
        polytope = growth_polytope(graph, cycles=cycles)
    image = nu_image(graph, cycles=cycles)
    origin = tuple(Fraction(0) for _ in range(graph.rank))
    witnesses, missing = {}, []
    for v in polytope.vertices:
        if v == origin:
            continue
        found = None
        for c in image.get(v, ()):
            if cls in c.classes:
                found = c
                break
        if found is None:
            missing.append(v)
        else:
            witnesses[v] = (found.weight, found)
    return PInitialData(cls, witnesses, tuple(missing))


def p_initial(graph: QuotientGraph, cls: int, **kw) -> bool:
    return p_initial_data(graph, cls, **kw).is_p_initial
