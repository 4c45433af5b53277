"""Comparison constants between graph distance and the polytope gauge,
alpha-window verification, and the well-arranged search.

Conventions: x0 is a Vertex; the graph must carry a realization.  c1 is
the exact maximum of gauge - distance over the ball of walks with at most
c-1 edges (c = number of classes); c2 maximizes distance - gauge over the
half-open region assembled from facet-triangulation boxes, using either
P-initial cycle data (strict variant) or full-class-support distances
(support variant).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .cycles import enumerate_cycles, growth_polytope, nu_image, p_initial_data
from .field import exact_ceil, scalar_sign
from .geometry import (HalfOpenRegion, LowerDimensionalHull, gauge,
                       integer_box, triangulate_facet, vadd, vsub)
from .quotient import (GraphError, QuotientGraph, Vertex, ball,
                       is_strongly_connected)


def _require_realization(graph):
    if graph.realization is None:
        raise GraphError("this computation needs a realization")


def _delta(graph, x0: Vertex, cls: int):
    """Phi(class base point) - Phi(x0) for offset 0 of the given class."""
    return vsub(graph.position(Vertex(cls, (0,) * graph.rank)),
                graph.position(x0))


def edge_count_ball(graph: QuotientGraph, x0: Vertex, max_edges: int):
    """Vertices reachable by walks with at most max_edges edges."""
    frontier = {x0}
    seen = {x0}
    for _ in range(max_edges):
        nxt = set()
        for v in frontier:
            for _, e in graph.out_edges(v.cls):
                w = Vertex(e.tgt, tuple(a + b for a, b in zip(v.offset, e.vector)))
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        frontier = nxt
    return seen


def c1(graph: QuotientGraph, x0: Vertex, polytope=None, max_states=10_000_000):
    """Exact value of sup_y (gauge(Phi(y) - Phi(x0)) - d(x0, y))."""
    _require_realization(graph)
    if polytope is None:
        polytope = growth_polytope(graph)
    if isinstance(polytope, LowerDimensionalHull):
        raise GraphError("growth polytope is lower-dimensional")
    c = graph.num_classes
    targets = edge_count_ball(graph, x0, c - 1)
    maxw = max(e.weight for e in graph.edges)
    dist = ball(graph, x0, (c - 1) * maxw, max_states=max_states)
    best = Fraction(0)
    pos0 = graph.position(x0)
    for y in targets:
        g = gauge(polytope, vsub(graph.position(y), pos0))
        val = g - dist[y]
        if scalar_sign(val - best) > 0:
            best = val
    return best


def _general_vertex_weights(graph, polytope, cycles):
    """For each nonzero polytope vertex: minimal weight of any cycle with
    that nu value (no class restriction)."""
    image = nu_image(graph, cycles=cycles)
    origin = tuple(Fraction(0) for _ in range(graph.rank))
    out = {}
    for v in polytope.vertices:
        if v == origin:
            continue
        reps = image.get(v)
        if not reps:
            raise GraphError("polytope vertex not realized by any cycle")
        out[v] = reps[0].weight
    return out


def region_from_triangulations(graph, polytope, d_map, apices=None):
    """Half-open union: over facets and fan simplices, sum of [0,1) d_v v."""
    origin = tuple(Fraction(0) for _ in range(graph.rank))
    regions = []
    for i, (a, b) in enumerate(polytope.facets):
        apex = None if apices is None else apices.get(i)
        for simplex in triangulate_facet(polytope, i, apex=apex):
            gens = tuple(tuple(d_map[v] * c for c in v) for v in simplex)
            exts = tuple(Fraction(1) for _ in simplex)
            regions.append(HalfOpenRegion(origin, gens, exts))
    return regions


def vertices_in_regions(graph, x0, regions):
    """Graph vertices y with Phi(y) - Phi(x0) in the union of regions."""
    los, his = zip(*(r.bounding_box() for r in regions))
    n = graph.rank
    lo = tuple(min(l[c] for l in los) for c in range(n))
    hi = tuple(max(h[c] for h in his) for c in range(n))
    found = []
    for cls in range(graph.num_classes):
        delta = _delta(graph, x0, cls)
        box = integer_box(vsub(lo, delta), vsub(hi, delta))
        for u in box:
            rel = vadd(delta, u)
            if any(r.contains(rel) for r in regions):
                found.append((Vertex(cls, tuple(a + b for a, b in
                                                zip(x0.offset, u))), rel))
    return found


def c2(graph: QuotientGraph, x0: Vertex, polytope=None, cycles=None,
       max_states=10_000_000):
    """Exact sup of d(x0, y) - gauge over the half-open region; needs x0
    P-initial."""
    _require_realization(graph)
    if cycles is None:
        cycles = enumerate_cycles(graph)
    if polytope is None:
        polytope = growth_polytope(graph, cycles=cycles)
    pdata = p_initial_data(graph, x0.cls, cycles=cycles, polytope=polytope)
    if not pdata.is_p_initial:
        raise GraphError("c2 requires a P-initial start vertex")
    d_map = {v: w for v, (w, _) in pdata.witnesses.items()}
    regions = region_from_triangulations(graph, polytope, d_map)
    targets = vertices_in_regions(graph, x0, regions)
    gauges = {y: gauge(polytope, rel) for y, rel in targets}
    radius = max(1, max(exact_ceil(g) for g in gauges.values()) + 1)
    while True:
        dist = ball(graph, x0, radius, max_states=max_states)
        if all(y in dist for y, _ in targets):
            break
        radius *= 2
    best = Fraction(0)
    for y, _ in targets:
        val = dist[y] - gauges[y]
        if scalar_sign(val - best) > 0:
            best = val
    return best


def support_distance(graph: QuotientGraph, x0: Vertex, targets,
                     max_states=10_000_000):
    """d'(x0, y) for each target: minimal weight of a walk from x0 to y whose
    class support is every class.  Returns dict Vertex -> int."""
    full = (1 << graph.num_classes) - 1
    want = set(targets)
    result = {}
    radius = graph.num_classes * max(e.weight for e in graph.edges)
    while True:
        start = (x0.cls, x0.offset, 1 << x0.cls)
        dist = {start: 0}
        heap = [(0,) + start]
        settled = set()
        result.clear()
        while heap:
            d, cls, off, mask = heapq.heappop(heap)
            state = (cls, off, mask)
            if state in settled:
                continue
            settled.add(state)
            if mask == full:
                v = Vertex(cls, off)
                if v in want and v not in result:
                    result[v] = d
                    if len(result) == len(want):
                        return result
            for _, e in graph.out_edges(cls):
                nd = d + e.weight
                if nd > radius:
                    continue
                ns = (e.tgt, tuple(a + b for a, b in zip(off, e.vector)),
                      mask | (1 << e.tgt))
                if dist.get(ns, nd + 1) > nd:
                    dist[ns] = nd
                    heapq.heappush(heap, (nd,) + ns)
                    if len(dist) > max_states:
                        raise GraphError(
                            f"support search exceeded {max_states} states")
        radius *= 2


def c2_support(graph: QuotientGraph, x0: Vertex, polytope=None, cycles=None,
               max_states=10_000_000):
    """Support variant: sup of d'(x0, y) - gauge over the half-open region,
    with d_v taken from minimal-weight cycles regardless of class."""
    _require_realization(graph)
    if cycles is None:
        cycles = enumerate_cycles(graph)
    if polytope is None:
        polytope = growth_polytope(graph, cycles=cycles)
    d_map = _general_vertex_weights(graph, polytope, cycles)
    regions = region_from_triangulations(graph, polytope, d_map)
    targets = vertices_in_regions(graph, x0, regions)
    dprime = support_distance(graph, x0, [y for y, _ in targets],
                              max_states=max_states)
    best = None
    for y, rel in targets:
        val = dprime[y] - gauge(polytope, rel)
        if best is None or scalar_sign(val - best) > 0:
            best = val
    return best


class AsymptoticConstants(NamedTuple):
    c1: object
    c2: object
    variant: str  # "p-initial" or "support"


def asymptotic_constants(graph: QuotientGraph, x0: Vertex,
                         max_states=10_000_000) -> AsymptoticConstants:
    """(c1, c2) pair with d <= gauge + c2 and gauge - c1 <= d; uses the
    P-initial variant when available, the class-support variant otherwise."""
    cycles = enumerate_cycles(graph)
    polytope = growth_polytope(graph, cycles=cycles)
    a = c1(graph, x0, polytope=polytope, max_states=max_states)
    pdata = p_initial_data(graph, x0.cls, cycles=cycles, polytope=polytope)
    if pdata.is_p_initial:
        b = c2(graph, x0, polytope=polytope, cycles=cycles,
               max_states=max_states)
        return AsymptoticConstants(a, b, "p-initial")
    b = c2_support(graph, x0, polytope=polytope, cycles=cycles,
                   max_states=max_states)
    return AsymptoticConstants(a, b, "support")


def alpha_ehrhart_window(c1_value, c2_value):
    """Half-open interval [c1, 1 - c2); None when empty."""
    lo = c1_value
    hi = 1 - c2_value
    if scalar_sign(hi - lo) <= 0:
        return None
    return (lo, hi)


def verify_alpha_ehrhart(graph: QuotientGraph, x0: Vertex, alpha, imax: int,
                         polytope=None, max_states=10_000_000) -> bool:
    """Check b_i == #{y : gauge(Phi(y) - Phi(x0)) <= i + alpha} for i<=imax."""
    _require_realization(graph)
    alpha = Fraction(alpha)
    if polytope is None:
        polytope = growth_polytope(graph)
    from .quotient import cumulative, growth_sequence
    b = cumulative(growth_sequence(graph, x0, imax + 1, max_states=max_states))
    tmax = imax + alpha
    if tmax < 0:
        return all(x == 0 for x in b)
    counts = [0] * (imax + 1)
    n = graph.rank
    scaled = [tuple(tmax * c for c in v) for v in polytope.vertices]
    lo = tuple(min(v[c] for v in scaled) for c in range(n))
    hi = tuple(max(v[c] for v in scaled) for c in range(n))
    for cls in range(graph.num_classes):
        delta = _delta(graph, x0, cls)
        for u in integer_box(vsub(lo, delta), vsub(hi, delta)):
            g = gauge(polytope, vadd(delta, u))
            if scalar_sign(g - tmax) > 0:
                continue
            # smallest i with i + alpha >= g
            i = max(0, exact_ceil(g - alpha))
            while scalar_sign(i + alpha - g) < 0:  # guard against ties
                i += 1
            if i <= imax:
                counts[i] += 1
    for i in range(1, imax + 1):
        counts[i] += counts[i - 1]
    return counts == b


@dataclass(frozen=True)
class WellArrangedResult:
    status: str              # "well-arranged" | "unknown" | "not-well-arranged"
    reason: str
    d_map: dict | None       # vertex -> d_v of the witness (None otherwise)
    apices: dict | None      # facet index -> fan apex
    simplices: tuple | None  # all witness simplices (tuples of vertices)
    polytope: object | None
    multiple: int | None


def well_arranged(graph: QuotientGraph, x0: Vertex, max_multiple=4,
                  max_states=10_000_000) -> WellArrangedResult:
    """Search for well-arrangement data at x0.

    Semi-decision: a negative verdict is returned only with a proof (the
    graph is directed, or x0 is not P-initial); exhausting the candidate
    d_v multiples and fan apices yields "unknown".
    """
    _require_realization(graph)
    if not graph.undirected:
        return WellArrangedResult("not-well-arranged", "graph is directed",
                                  None, None, None, None, None)
    if not is_strongly_connected(graph):
        raise GraphError("well-arranged search needs a strongly connected graph")
    cycles = enumerate_cycles(graph)
    polytope = growth_polytope(graph, cycles=cycles)
    if isinstance(polytope, LowerDimensionalHull):
        raise GraphError("growth polytope is lower-dimensional")
    pdata = p_initial_data(graph, x0.cls, cycles=cycles, polytope=polytope)
    if not pdata.is_p_initial:
        return WellArrangedResult(
            "not-well-arranged",
            f"start vertex is not P-initial (unrealized: {pdata.missing})",
            None, None, None, None, None)
    base_d = {v: w for v, (w, _) in pdata.witnesses.items()}
    for multiple in range(1, max_multiple + 1):
        d_map = {v: multiple * w for v, w in base_d.items()}
        apices = {}
        all_simplices = []
        ok = True
        ball_cache = {}
        for fi in range(len(polytope.facets)):
            fverts = polytope.facet_vertices(fi)
            chosen = None
            for apex in fverts:
                simplices = triangulate_facet(polytope, fi, apex=apex)
                if all(_wa_condition(graph, x0, d_map, simplex, ball_cache,
                                     max_states)
                       for simplex in simplices):
                    chosen = (apex, simplices)
                    break
            if chosen is None:
                ok = False
                break
            apices[fi] = chosen[0]
            all_simplices.extend(chosen[1])
        if ok:
            return WellArrangedResult("well-arranged", "witness found", d_map,
                                      apices, tuple(all_simplices), polytope,
                                      multiple)
    return WellArrangedResult("unknown", "candidate search exhausted", None,
                              None, None, polytope, None)


def _class_ball(graph, cls, radius, cache, max_states):
    key = (cls, radius)
    if key not in cache:
        cache[key] = ball(graph, Vertex(cls, (0,) * graph.rank), radius,
                          max_states=max_states)
    return cache[key]


def _wa_condition(graph, x0, d_map, simplex, ball_cache, max_states):
    """Check the distance-splitting identity for every subset of a simplex."""
    n = graph.rank
    origin = tuple(Fraction(0) for _ in range(n))
    full_sum = sum(d_map[v] for v in simplex)
    dist0 = _class_ball(graph, x0.cls, full_sum, ball_cache, max_states)
    for mask in range(1, 1 << len(simplex)):
        subset = [v for j, v in enumerate(simplex) if mask >> j & 1]
        total = sum(d_map[v] for v in subset)
        step = origin
        for v in subset:
            step = vadd(step, tuple(d_map[v] * c for c in v))
        if any(x.denominator != 1 for x in step):
            return False  # d_v * v must be a lattice vector
        z_rel = tuple(int(x) for x in step)
        gens = tuple(tuple(d_map[v] * c for c in v) for v in subset)
        region = HalfOpenRegion(origin, gens,
                                tuple(Fraction(1) for _ in subset))
        for y, _rel in vertices_in_regions(graph, x0, [region]):
            # d(x0,y): translate so x0 has offset 0
            y0 = Vertex(y.cls, tuple(a - b for a, b in
                                     zip(y.offset, x0.offset)))
            d1 = dist0.get(y0)
            if d1 is None or d1 > total:
                return False
            # d(y,z) = d((y.cls, 0), (x0.cls, x0off + z_rel - yoff)), and the
            # cached ball is translation-invariant, so shift to y at origin
            dist_y = _class_ball(graph, y.cls, full_sum, ball_cache, max_states)
            zoff = tuple(a + b - c for a, b, c in
                         zip(x0.offset, z_rel, y.offset))
            d2 = dist_y.get(Vertex(x0.cls, zoff))
            if d2 is None or d1 + d2 != total:
                return False
    return True
