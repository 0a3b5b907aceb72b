#    Power Domination Counter
#    Copyright (C) 2022-2026 The Authors

#    This program is free software: you can redistribute it and/or modify
#    it under the terms of the GNU Affero General Public License as published by
#    the Free Software Foundation, either version 3 of the License, or
#    (at your option) any later version.

#    This program is distributed in the hope that it will be useful,
#    but WITHOUT ANY WARRANTY; without even the implied warranty of
#    MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
#    GNU Affero General Public License for more details.

#    You should have received a copy of the GNU Affero General Public License
#    along with this program.  If not, see <https://www.gnu.org/licenses/>.

"""
Complete m-ary trees, their extensions by a stem,
and the extended subtrees hanging off the root.

Labels are canonical: BFS order with root 0, the children of v
are m*v+1 ... m*v+m, and the stem of an extended tree comes last.
"""

import logging
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Tuple, Union

from .. import utils
from ..errors import InvalidParameterError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0 .. vertex_count-1"""

    vertex_count: int
    adjacency: Tuple[Tuple[int, ...], ...]
    neighbor_masks: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count:
            raise InvalidParameterError("Adjacency does not cover every vertex")

        for u, row in enumerate(self.adjacency):
            if list(row) != sorted(set(row)):
                raise InvalidParameterError(
                    f"Neighbors of {u} must be sorted and distinct"
                )
            for v in row:
                if not 0 <= v < self.vertex_count or v == u:
                    raise InvalidParameterError(f"Bad neighbor {v} of vertex {u}")
                if u not in self.adjacency[v]:
                    raise InvalidParameterError(f"Edge {u}-{v} is not symmetric")

        object.__setattr__(
            self,
            "neighbor_masks",
            tuple(utils.bits_to_mask(row) for row in self.adjacency),
        )

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Tuple[int, int]]):
        rows = [set() for _ in range(vertex_count)]
        for u, v in edges:
            if u == v:
                raise InvalidParameterError(f"Self-loop at {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidParameterError(f"Edge {u}-{v} is out of range")
            if v in rows[u]:
                raise InvalidParameterError(f"Duplicate edge {u}-{v}")
            rows[u].add(v)
            rows[v].add(u)

        return cls(vertex_count, tuple(tuple(sorted(row)) for row in rows))

    @property
    def full_mask(self) -> int:
        return (1 << self.vertex_count) - 1

    @property
    def edge_count(self) -> int:
        return sum(map(len, self.adjacency)) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def edges(self) -> Iterator[Tuple[int, int]]:
        """Edges as (u, v) with u < v, ascending"""
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield u, v

    def edge_list_text(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled by ascending original id"""
        kept = sorted(set(vertices))
        relabel = {v: i for i, v in enumerate(kept)}
        return Graph(
            len(kept),
            tuple(
                tuple(relabel[w] for w in self.adjacency[v] if w in relabel)
                for v in kept
            ),
        )


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the center labeled 0"""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


@dataclass(frozen=True)
class CompleteTree:
    m: int
    h: int
    graph: Graph = field(repr=False)
    level_index: Tuple[Tuple[int, int], ...] = field(repr=False)
    root: int = 0

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    def parent(self, v: int) -> Union[int, None]:
        return None if v == 0 else (v - 1) // self.m

    def children(self, v: int) -> Tuple[int, ...]:
        first = self.m * v + 1
        if first >= self.vertex_count:
            return ()
        return tuple(range(first, first + self.m))

    def depth(self, v: int) -> int:
        return self.level_index[v][0]

    def leaves(self) -> Tuple[int, ...]:
        first = utils.tree_order(self.m, self.h - 1) if self.h else 0
        return tuple(range(first, self.vertex_count))


@dataclass(frozen=True)
class ExtendedTree:
    base: CompleteTree
    graph: Graph = field(repr=False)

    @property
    def m(self) -> int:
        return self.base.m

    @property
    def h(self) -> int:
        return self.base.h

    @property
    def root(self) -> int:
        return self.base.root

    @property
    def stem(self) -> int:
        return self.base.vertex_count

    @property
    def vertex_count(self) -> int:
        return self.graph.vertex_count

    @property
    def monitor_mask(self) -> int:
        """Every vertex except the stem"""
        return self.base.graph.full_mask


@dataclass(frozen=True)
class SubtreeView:
    """
    The i-th extended subtree G_i of a tree, kept as a label mapping.
    `tree` is the canonical T+_{m,h-1}; vertex_map[u] is the parent
    id of its vertex u, so the root goes to r_i and the stem to r.
    """

    parent_tree: Union[ExtendedTree, CompleteTree] = field(repr=False)
    index: int
    tree: ExtendedTree = field(repr=False)
    vertex_map: Tuple[int, ...] = field(repr=False)

    @property
    def image_mask(self) -> int:
        return utils.bits_to_mask(self.vertex_map)

    def lift(self, mask: int) -> int:
        """Canonical subtree mask -> parent mask"""
        return utils.bits_to_mask(self.vertex_map[u] for u in utils.iter_bits(mask))

    def restrict(self, mask: int) -> int:
        """Parent mask -> canonical subtree mask, dropping vertices outside G_i"""
        return utils.bits_to_mask(
            u for u, v in enumerate(self.vertex_map) if mask >> v & 1
        )


def build_complete_tree(m: int, h: int) -> CompleteTree:
    utils.check_arity(m)
    utils.check_height(h)

    n = utils.tree_order(m, h)
    internal = n - m**h
    edges = [(v, m * v + j) for v in range(internal) for j in range(1, m + 1)]

    levels = [(0, 0)]
    for v in range(1, n):
        levels.append((levels[(v - 1) // m][0] + 1, (v - 1) % m + 1))

    logger.debug("built T_{%d,%d} with %d vertices", m, h, n)
    return CompleteTree(m, h, Graph.from_edges(n, edges), tuple(levels))


def extend(tree: CompleteTree) -> ExtendedTree:
    n = tree.vertex_count
    edges = list(tree.graph.edges()) + [(tree.root, n)]
    return ExtendedTree(tree, Graph.from_edges(n + 1, edges))


def extended_subtree(
    tree: Union[ExtendedTree, CompleteTree], i: int
) -> SubtreeView:
    base = tree.base if isinstance(tree, ExtendedTree) else tree

    if base.h < 1:
        raise InvalidParameterError("A tree of height 0 has no extended subtrees")
    if isinstance(i, bool) or not isinstance(i, int) or not 1 <= i <= base.m:
        raise InvalidParameterError(f"Subtree index must be in [1, {base.m}], got {i!r}")

    canonical = extend(build_complete_tree(base.m, base.h - 1))
    mapping = [0] * canonical.vertex_count
    mapping[0] = base.children(base.root)[i - 1]
    for u in range(canonical.base.vertex_count):
        for child, image in zip(
            canonical.base.children(u), base.children(mapping[u])
        ):
            mapping[child] = image
    mapping[canonical.stem] = base.root

    return SubtreeView(tree, i, canonical, tuple(mapping))
