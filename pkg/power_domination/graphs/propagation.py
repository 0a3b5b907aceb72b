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
Power domination propagation.

P^0(S) = N[S]; every round, each observed vertex with exactly one
unobserved neighbor forces that neighbor. All forces of a round fire
together, so round k of a PropagationState is exactly P^k(S).

Vertex sets are accepted as an int bitmask or as any iterable of ids.
"""

import enum
import logging
import random
from dataclasses import dataclass
from typing import FrozenSet, Iterable, List, Sequence, Tuple, Union

from .. import utils
from ..errors import InvalidParameterError
from .core import ExtendedTree, Graph

logger = logging.getLogger(__name__)

VertexSet = Union[int, Iterable[int]]


class SetType(enum.Enum):
    TYPE_I = "I"
    TYPE_II = "II"
    TYPE_0 = "0"


@dataclass(frozen=True)
class Force:
    round: int
    source: int
    target: int

    def __str__(self) -> str:
        return f"{self.round} {self.source}->{self.target}"


@dataclass(frozen=True)
class PropagationState:
    graph: Graph
    initial: int
    observed: int
    round: int
    trace: Tuple[Force, ...]
    history: Tuple[int, ...]

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(utils.iter_bits(self.observed))

    @property
    def complete(self) -> bool:
        return self.observed == self.graph.full_mask


def as_mask(g: Graph, s: VertexSet) -> int:
    if isinstance(s, bool):
        raise InvalidParameterError("A vertex set cannot be a boolean")

    mask = s if isinstance(s, int) else utils.bits_to_mask(s)
    if mask < 0 or mask >> g.vertex_count:
        raise InvalidParameterError(
            f"Vertex set is not contained in the {g.vertex_count} vertices of the graph"
        )
    return mask


def _closed_mask(g: Graph, mask: int) -> int:
    closed = mask
    for v in utils.iter_bits(mask):
        closed |= g.neighbor_masks[v]
    return closed


def _eligible(g: Graph, observed: int):
    """Pairs (x, y) where y is the only unobserved neighbor of observed x"""
    for x in utils.iter_bits(observed):
        rest = g.neighbor_masks[x] & ~observed
        if rest and not rest & (rest - 1):
            yield x, rest.bit_length() - 1


def closed_neighborhood(g: Graph, s: VertexSet) -> FrozenSet[int]:
    return frozenset(utils.iter_bits(_closed_mask(g, as_mask(g, s))))


def closure_mask(g: Graph, mask: int) -> int:
    """P^inf(S) as a mask, without recording a trace"""
    nbr = g.neighbor_masks
    observed = _closed_mask(g, mask)
    while True:
        new = 0
        for x in utils.iter_bits(observed):
            rest = nbr[x] & ~observed
            if rest and not rest & (rest - 1):
                new |= rest
        if not new:
            return observed
        observed |= new


def propagate(g: Graph, s: VertexSet) -> PropagationState:
    initial = as_mask(g, s)
    observed = _closed_mask(g, initial)
    history = [observed]
    trace: List[Force] = []
    rounds = 0

    while True:
        fired = list(_eligible(g, observed))
        if not fired:
            break

        rounds += 1
        for x, y in fired:
            trace.append(Force(rounds, x, y))
            observed |= 1 << y
        history.append(observed)

    logger.debug(
        "propagation reached %d/%d vertices in %d rounds",
        utils.popcount(observed),
        g.vertex_count,
        rounds,
    )
    return PropagationState(g, initial, observed, rounds, tuple(trace), tuple(history))


def propagate_randomized(g: Graph, s: VertexSet, rng: random.Random) -> int:
    """Fire one randomly chosen eligible force at a time; returns the fixpoint"""
    observed = _closed_mask(g, as_mask(g, s))
    while True:
        fired = list(_eligible(g, observed))
        if not fired:
            return observed
        observed |= 1 << rng.choice(fired)[1]


def is_power_dominating(g: Graph, s: VertexSet) -> bool:
    return closure_mask(g, as_mask(g, s)) == g.full_mask


def classify(t: ExtendedTree, s: VertexSet) -> SetType:
    mask = as_mask(t.graph, s)
    if mask >> t.stem & 1:
        raise InvalidParameterError("Monitor sets on an extended tree exclude the stem")

    full = t.graph.full_mask
    if closure_mask(t.graph, mask) == full:
        return SetType.TYPE_I
    if closure_mask(t.graph, mask | 1 << t.stem) == full:
        return SetType.TYPE_II
    return SetType.TYPE_0


def forcing_pairs(g: Graph, s: VertexSet) -> FrozenSet[Tuple[int, int]]:
    """
    Every (x, y) with x in A and N(x) - A = {y}, for A ranging over
    S, P^0(S), P^1(S), ... P^inf(S)
    """
    initial = as_mask(g, s)
    state = propagate(g, initial)
    pairs = set(_eligible(g, initial))
    pairs.update((force.source, force.target) for force in state.trace)
    return frozenset(pairs)


def forcing_chain_valid(g: Graph, s: VertexSet, chain: Sequence[int]) -> bool:
    if not chain:
        raise InvalidParameterError("A forcing chain needs at least one vertex")
    if len(set(chain)) != len(chain):
        raise InvalidParameterError("Forcing chain vertices must be distinct")

    if len(chain) == 1:
        return bool(propagate(g, s).observed >> chain[0] & 1)

    pairs = forcing_pairs(g, s)
    return all(pair in pairs for pair in zip(chain, chain[1:]))


def format_trace(state: PropagationState) -> str:
    return "".join(f"{force}\n" for force in state.trace)
