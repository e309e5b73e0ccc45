"""Deterministic constructions of the six known SRNT graphs."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, product

from .graph import Graph

INFINITY = 21

# GF(4) = GF(2)[x]/(x^2 + x + 1); element a + b*x is stored as a | b << 1
_GF4_MUL = [
    [0, 0, 0, 0],
    [0, 1, 2, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
]


@dataclass(frozen=True)
class SteinerSystem:
    point_count: int
    blocks: tuple[tuple[int, ...], ...]

    def check(self) -> None:
        """Raise AssertionError unless this is an S(3,6,22)."""
        assert self.point_count == 22 and len(self.blocks) == 77
        assert all(len(b) == 6 and len(set(b)) == 6 for b in self.blocks)
        covered = {}
        for b in self.blocks:
            for t in combinations(b, 3):
                covered[t] = covered.get(t, 0) + 1
        assert len(covered) == 1540 and set(covered.values()) == {1}, "triples not covered exactly once"
        for p in range(22):
            assert sum(p in b for b in self.blocks) == 21, f"point {p} not in 21 blocks"
        sets = [frozenset(b) for b in self.blocks]
        for a, b in combinations(sets, 2):
            assert len(a & b) in (0, 2), "blocks meet in an odd number of points"


def petersen() -> Graph:
    pairs = list(combinations(range(5), 2))
    return Graph.from_edges(10, [(i, j) for i, j in combinations(range(10), 2)
                                 if not set(pairs[i]) & set(pairs[j])])


def clebsch() -> Graph:
    return Graph.from_edges(16, [(x, y) for x, y in combinations(range(16), 2)
                                 if bin(x ^ y).count("1") in (1, 4)])


def hoffman_singleton() -> Graph:
    """Robertson's pentagons and pentagrams: P_h is 5h+j, Q_i is 25+5i+j."""
    edges = []
    for h in range(5):
        for j in range(5):
            edges.append((5 * h + j, 5 * h + (j + 1) % 5))
            edges.append((25 + 5 * h + j, 25 + 5 * h + (j + 2) % 5))
            for i in range(5):
                edges.append((5 * h + j, 25 + 5 * i + (h * i + j) % 5))
    return Graph.from_edges(50, edges)


def projective_plane_4() -> tuple[list[tuple[int, int, int]], list[int]]:
    """Points of PG(2,4) in lexicographic order and the lines as point bitmasks."""
    points = sorted(v for v in product(range(4), repeat=3)
                    if any(v) and v[next(i for i in range(3) if v[i])] == 1)

    def dot(u, v):
        acc = 0
        for a, b in zip(u, v):
            acc ^= _GF4_MUL[a][b]
        return acc

    lines = []
    for line in points:  # the plane is self-dual
        mask = 0
        for i, p in enumerate(points):
            if dot(line, p) == 0:
                mask |= 1 << i
        lines.append(mask)
    return points, lines


def hyperovals(lines: list[int]) -> list[tuple[int, ...]]:
    """All 6-point sets with no three points collinear, in lexicographic order."""
    found = []

    def extend(chosen: list[int], start: int):
        if len(chosen) == 6:
            found.append(tuple(chosen))
            return
        mask = sum(1 << p for p in chosen)
        for p in range(start, 21):
            bit = 1 << p
            if all((line & mask).bit_count() < 2 for line in lines if line & bit):
                chosen.append(p)
                extend(chosen, p + 1)
                chosen.pop()

    extend([], 0)
    return found


def _even_classes(ovals: list[tuple[int, ...]]) -> list[list[tuple[int, ...]]]:
    sets = [frozenset(o) for o in ovals]
    label = [-1] * len(ovals)
    classes = []
    for i in range(len(ovals)):
        if label[i] >= 0:
            continue
        label[i] = len(classes)
        stack, members = [i], [i]
        while stack:
            a = stack.pop()
            for b in range(len(ovals)):
                if label[b] < 0 and len(sets[a] & sets[b]) % 2 == 0:
                    label[b] = label[i]
                    stack.append(b)
                    members.append(b)
        classes.append([ovals[m] for m in sorted(members)])
    return classes


@lru_cache(maxsize=1)
def witt_design_22() -> SteinerSystem:
    _, lines = projective_plane_4()
    ovals = hyperovals(lines)
    assert len(ovals) == 168, f"found {len(ovals)} hyperovals"
    classes = _even_classes(ovals)
    assert sorted(len(c) for c in classes) == [56, 56, 56], [len(c) for c in classes]
    chosen = next(c for c in classes if ovals[0] in c)
    blocks = [tuple(p for p in range(21) if line >> p & 1) + (INFINITY,) for line in lines]
    blocks.extend(chosen)
    design = SteinerSystem(22, tuple(blocks))
    design.check()
    return design


def _disjointness_graph(blocks) -> Graph:
    sets = [frozenset(b) for b in blocks]
    return Graph.from_edges(len(sets), [(i, j) for i, j in combinations(range(len(sets)), 2)
                                        if not sets[i] & sets[j]])


def m22_graph(design: SteinerSystem) -> Graph:
    return _disjointness_graph(design.blocks)


def gewirtz_graph(design: SteinerSystem, point: int = INFINITY) -> Graph:
    if not 0 <= point < design.point_count:
        raise ValueError(f"no point {point} in the design")
    return _disjointness_graph([b for b in design.blocks if point not in b])


def higman_sims(design: SteinerSystem) -> Graph:
    """Vertex 0 is the extra vertex, 1..22 the points, 23..99 the blocks in design order."""
    edges = [(0, 1 + p) for p in range(design.point_count)]
    offset = 1 + design.point_count
    for b, block in enumerate(design.blocks):
        edges.extend((1 + p, offset + b) for p in block)
    edges.extend((offset + i, offset + j) for i, j in m22_graph(design).edges())
    return Graph.from_edges(offset + len(design.blocks), edges)


NAMES = ("petersen", "clebsch", "hoffman-singleton", "gewirtz", "m22", "higman-sims")


def by_name(name: str) -> Graph:
    simple = {"petersen": petersen, "clebsch": clebsch, "hoffman-singleton": hoffman_singleton}
    designed = {"gewirtz": gewirtz_graph, "m22": m22_graph, "higman-sims": higman_sims}
    if name in simple:
        return simple[name]()
    if name in designed:
        return designed[name](witt_design_22())
    raise KeyError(f"unknown graph {name!r}; choose from {', '.join(NAMES)}")
