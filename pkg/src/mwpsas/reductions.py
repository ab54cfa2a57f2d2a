"""Decision instances built from CLIQUE and 3-PARTITION inputs.

Id layout is fixed so provenance maps and golden files stay stable:

* clique: N = edges (sorted), then T, then the single T0 element;
  M = the graph's nodes, then S.
* 3-partition: the blocks A_1..A_3r are laid out consecutively in k order.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import Part3FormatError, PreconditionError
from .model import Instance, validate_instance


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on nodes ``1..node_count``."""

    node_count: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        if self.node_count < 0:
            raise ValueError("node_count must be non-negative")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            u, v = min(u, v), max(u, v)
            if u < 1 or v > self.node_count:
                raise ValueError(f"edge {e} references a missing node")
            norm.add((u, v))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, node_count: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        return cls(node_count, frozenset(tuple(e) for e in edges))

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)


@dataclass(frozen=True)
class Part3Instance:
    r: int
    b: int
    a: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))


def validate_part3(p3: Part3Instance) -> Part3Instance:
    """Enforce 3r integers > 1 summing to rB with B/4 < a_k < B/2."""
    if p3.r < 1:
        raise Part3FormatError(f"r must be positive, got {p3.r}")
    if p3.b < 1:
        raise Part3FormatError(f"B must be positive, got {p3.b}")
    if len(p3.a) != 3 * p3.r:
        raise Part3FormatError(f"expected {3 * p3.r} integers, got {len(p3.a)}")
    for k, x in enumerate(p3.a, 1):
        if x <= 1:
            raise Part3FormatError(f"a_{k} = {x} must exceed 1")
        # B/4 < a < B/2 in integers
        if not (4 * x > p3.b and 2 * x < p3.b):
            raise Part3FormatError(f"a_{k} = {x} violates B/4 < a_k < B/2 for B = {p3.b}")
    if sum(p3.a) != p3.r * p3.b:
        raise Part3FormatError(f"sum of a is {sum(p3.a)}, expected r*B = {p3.r * p3.b}")
    return p3


@dataclass(frozen=True)
class DecisionInstance:
    """An instance together with the target C and role labels for every id.

    ``n_roles[i-1]`` / ``m_roles[j-1]`` are short labels such as ``W:1-2``,
    ``T:3``, ``T0``, ``V:4``, ``S:1`` or ``A3``.
    """

    instance: Instance
    target: int
    n_roles: tuple[str, ...]
    m_roles: tuple[str, ...]


def reduce_clique(g: Graph, k: int) -> DecisionInstance:
    """Two-machine unit-weight instance with f* <= n + |W| + k iff g has a k-clique."""
    n = g.node_count
    w = len(g.edges)
    if not (k > 1 and k < n and (k * k - k) // 2 < w):
        raise PreconditionError(
            f"need 1 < k < |V| and (k^2-k)/2 < |W|; got k={k}, |V|={n}, |W|={w}"
        )
    t_size = (k * k + k) // 2
    s_size = n + w - (k * k - k) // 2 - 1

    assoc: list[frozenset[int]] = []
    n_roles: list[str] = []
    for u, v in g.sorted_edges():
        assoc.append(frozenset((u, v)))
        n_roles.append(f"W:{u}-{v}")
    all_nodes = frozenset(range(1, n + 1))
    for t in range(1, t_size + 1):
        assoc.append(all_nodes)
        n_roles.append(f"T:{t}")
    assoc.append(frozenset(range(n + 1, n + s_size + 1)))
    n_roles.append("T0")

    m_roles = [f"V:{v}" for v in range(1, n + 1)] + [f"S:{s}" for s in range(1, s_size + 1)]
    inst = Instance(
        n_count=len(assoc),
        m_count=n + s_size,
        machines=2,
        n_weights=(1,) * len(assoc),
        m_weights=(1,) * (n + s_size),
        assoc=tuple(assoc),
    )
    return DecisionInstance(validate_instance(inst), n + w + k, tuple(n_roles), tuple(m_roles))


def _blocks(a: tuple[int, ...]) -> list[range]:
    out, start = [], 1
    for x in a:
        out.append(range(start, start + x - 1))
        start += x - 1
    return out


def reduce_part3_m1(p3: Part3Instance) -> DecisionInstance:
    """M1 instance: |A_k| = a_k - 1 elements all associated with M-element k."""
    validate_part3(p3)
    blocks = _blocks(p3.a)
    n_count = sum(len(b) for b in blocks)
    if p3.r >= n_count:
        raise PreconditionError(f"machines r={p3.r} must be below |N|={n_count}")
    assoc: list[frozenset[int]] = []
    n_roles: list[str] = []
    for k, blk in enumerate(blocks, 1):
        for _ in blk:
            assoc.append(frozenset((k,)))
            n_roles.append(f"A{k}")
    m_count = 3 * p3.r
    inst = Instance(
        n_count=n_count,
        m_count=m_count,
        machines=p3.r,
        n_weights=(1,) * n_count,
        m_weights=(1,) * m_count,
        assoc=tuple(assoc),
    )
    m_roles = tuple(f"j{k}" for k in range(1, m_count + 1))
    return DecisionInstance(validate_instance(inst), p3.b, tuple(n_roles), m_roles)


def reduce_part3_n1(p3: Part3Instance) -> DecisionInstance:
    """N1 instance: N-element k is associated with its own block A_k of size a_k - 1."""
    validate_part3(p3)
    blocks = _blocks(p3.a)
    n_count = 3 * p3.r
    m_count = sum(len(b) for b in blocks)
    m_roles: list[str] = []
    for k, blk in enumerate(blocks, 1):
        m_roles.extend(f"A{k}" for _ in blk)
    inst = Instance(
        n_count=n_count,
        m_count=m_count,
        machines=p3.r,
        n_weights=(1,) * n_count,
        m_weights=(1,) * m_count,
        assoc=tuple(frozenset(b) for b in blocks),
    )
    n_roles = tuple(f"i{k}" for k in range(1, n_count + 1))
    return DecisionInstance(validate_instance(inst), p3.b, n_roles, tuple(m_roles))
