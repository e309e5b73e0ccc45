"""Exact verification of SRNT axioms and second-subconstituent structure on concrete graphs.

Adjacency is held as one Python-int bitset per vertex. Matrix identities are
checked in int64 with an explicit bound test before every product, so any
result that is returned is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

import numpy as np

from .params import ParamSet, derive_from_kc

_INT64_SAFE = 2**62


class GraphFormatError(ValueError):
    """Malformed graph JSON; the message carries the offending position."""


class StructureError(ValueError):
    """A structural property that must hold for SRNT input does not."""


def _bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


class Graph:
    """Immutable finite simple graph on vertices ``0..n-1``."""

    __slots__ = ("_n", "_adj")

    def __init__(self, n: int, adjacency: Iterable[int]):
        adj = tuple(adjacency)
        if n < 1 or len(adj) != n:
            raise ValueError(f"need n >= 1 bitsets, got n={n} with {len(adj)} rows")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency between {v} and {u}")
        self._n = n
        self._adj = adj

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj)

    @property
    def n(self) -> int:
        return self._n

    @property
    def adjacency(self) -> tuple[int, ...]:
        return self._adj

    def neighbours(self, v: int) -> list[int]:
        return list(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def common(self, u: int, v: int) -> int:
        return (self._adj[u] & self._adj[v]).bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self._n) for v in _bits(self._adj[u] >> (u + 1) << (u + 1))]

    def matrix(self) -> np.ndarray:
        a = np.zeros((self._n, self._n), dtype=np.int64)
        for u, v in self.edges():
            a[u, v] = a[v, u] = 1
        return a

    def induced(self, vertices: list[int]) -> Graph:
        index = {v: i for i, v in enumerate(vertices)}
        adj = []
        for v in vertices:
            row = 0
            for u in _bits(self._adj[v]):
                if u in index:
                    row |= 1 << index[u]
            adj.append(row)
        return Graph(len(vertices), adj)

    def distances_from(self, v: int) -> list[int]:
        """BFS distances from v; -1 for unreachable vertices."""
        dist = [-1] * self._n
        dist[v] = 0
        seen = 1 << v
        frontier = 1 << v
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for u in _bits(frontier):
                nxt |= self._adj[u]
            frontier = nxt & ~seen
            seen |= frontier
            for u in _bits(frontier):
                dist[u] = d
        return dist

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self._adj == other._adj

    def __hash__(self) -> int:
        return hash(self._adj)

    def __repr__(self) -> str:
        return f"Graph(n={self._n}, edges={len(self.edges())})"


# ---------------------------------------------------------------- JSON format

def to_json(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}, separators=(",", ":"))


def from_json(text: str) -> Graph:
    """Parse the ``{"n": int, "edges": [[u, v], ...]}`` format strictly."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise GraphFormatError(f"line {e.lineno} column {e.colno}: {e.msg}") from None
    if not isinstance(data, dict):
        raise GraphFormatError("$: expected an object")
    extra = set(data) - {"n", "edges"}
    if extra:
        raise GraphFormatError(f"$: unexpected fields {sorted(extra)}")
    n = data.get("n")
    if type(n) is not int or n < 1:
        raise GraphFormatError("$.n: expected a positive integer")
    edges = data.get("edges")
    if not isinstance(edges, list):
        raise GraphFormatError("$.edges: expected an array")
    prev = None
    for i, e in enumerate(edges):
        if not (isinstance(e, list) and len(e) == 2 and all(type(x) is int for x in e)):
            raise GraphFormatError(f"$.edges[{i}]: expected a pair of integers")
        u, v = e
        if not (0 <= u < v < n):
            raise GraphFormatError(f"$.edges[{i}]: need 0 <= u < v < n, got {e}")
        if prev is not None and (u, v) <= prev:
            raise GraphFormatError(f"$.edges[{i}]: edges must be sorted and unique")
        prev = (u, v)
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------- certificates

@dataclass(frozen=True)
class SrntCertificate:
    k: int
    c: int
    n: int
    connected: bool
    bipartite: bool
    params: ParamSet


@dataclass(frozen=True)
class Violation:
    axiom: str
    witness: tuple[int, ...]
    detail: str = ""

    def __str__(self) -> str:
        return f"{self.axiom} at {self.witness}: {self.detail}"


def _two_colouring_conflict(g: Graph) -> tuple[int, int] | None:
    """An edge whose ends get the same BFS colour from vertex 0, or None if bipartite."""
    colour = g.distances_from(0)
    for u, v in g.edges():
        if colour[u] % 2 == colour[v] % 2:
            return u, v
    return None


def verify_srnt(g: Graph) -> SrntCertificate | Violation:
    n = g.n
    k = g.degree(0)
    for v in range(n):
        if g.degree(v) != k:
            return Violation("not-regular", (v,), f"degree {g.degree(v)}, vertex 0 has {k}")
    for u, v in g.edges():
        if g.common(u, v):
            return Violation("triangle", (u, v), f"adjacent pair with {g.common(u, v)} common neighbours")
    c = None
    witness = None
    for u, v in combinations(range(n), 2):
        if g.adjacent(u, v):
            continue
        cn = g.common(u, v)
        if c is None:
            c, witness = cn, (u, v)
        elif cn != c:
            return Violation("common-neighbours", (u, v),
                             f"{cn} common neighbours, but {witness} has {c}")
    if c is None:
        return Violation("complete", (0,), "no non-adjacent pair")
    dist = g.distances_from(0)
    if -1 in dist:
        return Violation("disconnected", (0, dist.index(-1)), "no path")
    conflict = _two_colouring_conflict(g)
    if conflict is None:
        return Violation("bipartite", (0,), "graph is bipartite")
    if k < 3:
        return Violation("degree-too-small", (0,), f"k={k} < 3")
    if not (1 <= c < k):
        return Violation("c-out-of-range", witness, f"need k > c >= 1, got k={k}, c={c}")
    report = derive_from_kc(k, c)
    if not report.feasible:
        return Violation("infeasible-parameters", (0,), ", ".join(report.failures))
    return SrntCertificate(k=k, c=c, n=n, connected=True, bipartite=False, params=report.params)


# ---------------------------------------------------------------- exact matrices

def _matmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    if a.size and b.size:
        bound = int(np.abs(a).sum(axis=1).max()) * int(np.abs(b).max())
        if bound >= _INT64_SAFE:
            raise OverflowError("matrix product may exceed int64")
    return a @ b


def matrix_identity_check(g: Graph, k: int, c: int) -> bool:
    """AJ = kJ and A^2 + cA - (k-c)I = cJ, entrywise."""
    a = g.matrix()
    if not (a.sum(axis=1) == k).all():
        return False
    lhs = _matmul(a, a) + c * a - (k - c) * np.eye(g.n, dtype=np.int64)
    return bool((lhs == c).all())


@dataclass(frozen=True)
class SubconstituentDecomposition:
    base_vertex: int
    x1: tuple[int, ...]
    x2: tuple[int, ...]
    B: np.ndarray  # rows indexed by x2, columns by x1
    A2: np.ndarray
    x2_graph: Graph

    @property
    def c(self) -> int:
        """Neighbours in x1 of the first x2 vertex (the common-neighbour count for SRNT input)."""
        return int(self.B[0].sum()) if len(self.x2) else 0


def subconstituent(g: Graph, v: int) -> SubconstituentDecomposition:
    dist = g.distances_from(v)
    far = [u for u, d in enumerate(dist) if d > 2 or d < 0]
    if far:
        raise StructureError(f"vertex {far[0]} is not within distance 2 of {v}")
    x1 = [u for u, d in enumerate(dist) if d == 1]
    x2 = [u for u, d in enumerate(dist) if d == 2]
    B = np.array([[int(g.adjacent(w, u)) for u in x1] for w in x2], dtype=np.int64).reshape(len(x2), len(x1))
    h = g.induced(x2)
    return SubconstituentDecomposition(v, tuple(x1), tuple(x2), B, h.matrix(), h)


def block_identities_check(dec: SubconstituentDecomposition, k: int, c: int) -> bool:
    """B^T B = (c-1)J + (k-c)I,  A2^2 + cA2 - (k-c)I + BB^T = cJ,  A2 B = -cB + cJ."""
    B, A2 = dec.B, dec.A2
    ell = A2.shape[0]
    if A2.shape != (ell, ell) or B.shape != (ell, k):
        raise ValueError(f"dimension mismatch: B {B.shape}, A2 {A2.shape}, k={k}")
    Bt = B.T
    # off-diagonal c-1 (v is the other common neighbour), diagonal k-1
    eq1 = (_matmul(Bt, B) == (c - 1) + (k - c) * np.eye(k, dtype=np.int64)).all()
    eq2 = (_matmul(A2, A2) + c * A2 - (k - c) * np.eye(ell, dtype=np.int64) + _matmul(B, Bt) == c).all()
    eq3 = (_matmul(A2, B) == -c * B + c).all()
    return bool(eq1 and eq2 and eq3)


def x2_diameter(dec: SubconstituentDecomposition) -> int:
    h = dec.x2_graph
    diameter = 0
    for v in range(h.n):
        dist = h.distances_from(v)
        if -1 in dist:
            raise StructureError(f"second subconstituent of {dec.base_vertex} is disconnected")
        diameter = max(diameter, max(dist))
    if diameter > 3:
        raise StructureError(f"second subconstituent of {dec.base_vertex} has diameter {diameter}")
    return diameter


def _candidates(k: int, c: int) -> list[int]:
    report = derive_from_kc(k, c)
    if report.params is None:
        raise ValueError(f"(k={k}, c={c}) is not feasible: {report.failures}")
    p = report.params
    return list(dict.fromkeys([k - c, p.q, p.lambda2, -c]))


def x2_annihilator_check(dec: SubconstituentDecomposition, k: int, c: int) -> bool:
    """(A2-(k-c)I)(A2-l1 I)(A2-l2 I)(A2+cI) == 0, i.e. the spectrum of A2 lies in {k-c, l1, l2, -c}."""
    A2 = dec.A2
    eye = np.eye(A2.shape[0], dtype=np.int64)
    prod = eye
    for mu in _candidates(k, c):
        prod = _matmul(prod, A2 - mu * eye)
    return not prod.any()


def _solve(m: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(m)
    aug = [row[:] + [r] for row, r in zip(m, rhs)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col] != 0)
        aug[col], aug[piv] = aug[piv], aug[col]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col] / aug[col][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def x2_multiplicities(dec: SubconstituentDecomposition, k: int, c: int) -> dict[int, int]:
    """Eigenvalue multiplicities of A2 on the candidate set, from the traces of A2^0..A2^3."""
    cands = _candidates(k, c)
    if len(cands) < 4:
        raise StructureError(f"candidate eigenvalues coincide: {cands}")
    A2 = dec.A2
    ell = A2.shape[0]
    sq = _matmul(A2, A2)
    traces = [ell, int(np.trace(A2)), int(np.trace(sq)), int(np.trace(_matmul(sq, A2)))]
    vander = [[Fraction(mu) ** j for mu in cands] for j in range(4)]
    sol = _solve(vander, [Fraction(t) for t in traces])
    if any(x.denominator != 1 or x < 0 for x in sol):
        raise StructureError(f"multiplicities are not nonnegative integers: {sol}")
    mult = {mu: int(x) for mu, x in zip(cands, sol)}
    if mult[k - c] != 1:
        raise StructureError(f"eigenvalue {k - c} has multiplicity {mult[k - c]}, expected 1")
    return mult


def moore_antipodal_check(dec: SubconstituentDecomposition, k: int) -> bool:
    """For c = 1: distance-3 classes of X2 form k fibres of size k-1 covering K_k."""
    if dec.c != 1:
        raise ValueError(f"antipodal check needs c = 1, got c = {dec.c}")
    h = dec.x2_graph
    classes = {}
    for v in range(h.n):
        dist = h.distances_from(v)
        classes[v] = frozenset([v] + [u for u, d in enumerate(dist) if d == 3])
    for v, cls in classes.items():
        if any(classes[u] != cls for u in cls):
            return False
    fibres = sorted(set(classes.values()), key=min)
    if len(fibres) != k or any(len(f) != k - 1 for f in fibres):
        return False
    for v in range(h.n):
        hits = [sum(1 for u in h.neighbours(v) if u in f) for f in fibres]
        for f, count in zip(fibres, hits):
            if count != (0 if v in f else 1):
                return False
    return True
