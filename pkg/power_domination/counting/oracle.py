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
Exhaustive ground truth. Every subset is checked against the propagation
rules directly; nothing here is pruned or exploits symmetry.
Subsets are visited in increasing bitmask (colex) order.
"""

import logging
from concurrent.futures import ProcessPoolExecutor
from typing import List, Tuple

from .. import utils
from ..errors import CapacityError, InvalidParameterError
from ..graphs.core import ExtendedTree, Graph, build_complete_tree, extend
from ..graphs.propagation import closure_mask
from .combinatorics import CountPoly, CountReport

logger = logging.getLogger(__name__)

DEFAULT_CAP = 25
CHUNKS_PER_WORKER = 4


class OracleReport(CountReport):
    """Counts of power dominating sets found by enumerating every subset"""


def check_capacity(g: Graph, cap: int = DEFAULT_CAP):
    if g.vertex_count > cap:
        raise CapacityError(g.vertex_count, cap)


def _tally_range(g: Graph, start: int, stop: int) -> List[int]:
    counts = [0] * (g.vertex_count + 1)
    full = g.full_mask
    for mask in range(start, stop):
        if closure_mask(g, mask) == full:
            counts[utils.popcount(mask)] += 1
    return counts


def _census_range(t: ExtendedTree, start: int, stop: int) -> List[List[int]]:
    """Type I, Type II and Type 0 tallies by size over monitor masks in range"""
    size = t.base.vertex_count + 1
    census = [[0] * size for _ in range(3)]
    full = t.graph.full_mask
    stem = 1 << t.stem
    for mask in range(start, stop):
        k = utils.popcount(mask)
        if closure_mask(t.graph, mask) == full:
            census[0][k] += 1
        elif closure_mask(t.graph, mask | stem) == full:
            census[1][k] += 1
        else:
            census[2][k] += 1
    return census


def _chunks(total: int, pieces: int) -> List[Tuple[int, int]]:
    step = max(1, -(-total // pieces))
    return [(start, min(start + step, total)) for start in range(0, total, step)]


def _add(left, right):
    if isinstance(left, list) and left and isinstance(left[0], list):
        return [_add(a, b) for a, b in zip(left, right)]
    return [a + b for a, b in zip(left, right)]


def _run(func, subject, total: int, workers: int):
    """Apply func over [0, total) and sum the results, optionally in parallel"""
    if workers <= 1 or total < 2 * workers:
        return func(subject, 0, total)

    ranges = _chunks(total, workers * CHUNKS_PER_WORKER)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        futures = [pool.submit(func, subject, start, stop) for start, stop in ranges]
        results = [future.result() for future in futures]

    merged = results[0]
    for result in results[1:]:
        merged = _add(merged, result)
    return merged


def oracle_counts(g: Graph, cap: int = DEFAULT_CAP, workers: int = 1) -> List[int]:
    """Number of power dominating sets of every size 0 .. n"""
    check_capacity(g, cap)
    logger.debug("enumerating 2^%d subsets with %d worker(s)", g.vertex_count, workers)
    return _run(_tally_range, g, 1 << g.vertex_count, workers)


def oracle_report(
    m: int, h: int, cap: int = DEFAULT_CAP, workers: int = 1
) -> OracleReport:
    return OracleReport(m, h, oracle_counts(build_complete_tree(m, h).graph, cap, workers))


def oracle_count_pds(g: Graph, k: int, cap: int = DEFAULT_CAP) -> int:
    check_capacity(g, cap)
    n = g.vertex_count
    if k < 0 or k > n:
        return 0

    full = g.full_mask
    found = 0
    mask = (1 << k) - 1
    while mask < 1 << n:
        if closure_mask(g, mask) == full:
            found += 1
        if not mask:
            break
        mask = utils.next_combination(mask)
    return found


def oracle_gamma_p(g: Graph, cap: int = DEFAULT_CAP) -> int:
    check_capacity(g, cap)
    for k in range(g.vertex_count + 1):
        if oracle_count_pds(g, k, cap):
            return k
    return None


def _extended(m: int, h: int, cap: int) -> ExtendedTree:
    t = extend(build_complete_tree(m, h))
    check_capacity(t.graph, cap)
    return t


def oracle_type_census(
    m: int, h: int, cap: int = DEFAULT_CAP, workers: int = 1
) -> Tuple[CountPoly, CountPoly, CountPoly]:
    """(E, H, Zero) over all monitor sets of T+_{m,h}, stem excluded"""
    t = _extended(m, h, cap)
    census = _run(_census_range, t, 1 << t.base.vertex_count, workers)
    return tuple(CountPoly(row) for row in census)


def oracle_eh_table(
    m: int, h: int, cap: int = DEFAULT_CAP, workers: int = 1
) -> Tuple[CountPoly, CountPoly]:
    E, H, _ = oracle_type_census(m, h, cap, workers)
    return E, H


def oracle_frontier_check(m: int, h: int, cap: int = DEFAULT_CAP) -> bool:
    """
    Every Type II set leaves N[r] - Obs = {r', r_i} for some child r_i
    when h is odd, and {r', r} when h is even
    """
    if h < 1:
        raise InvalidParameterError("The frontier property needs height >= 1")

    t = _extended(m, h, cap)
    g, root, stem = t.graph, t.root, 1 << t.stem
    closed_root = g.neighbor_masks[root] | 1 << root
    if h % 2:
        allowed = {stem | 1 << child for child in t.base.children(root)}
    else:
        allowed = {stem | 1 << root}

    full = g.full_mask
    type_two = 0
    for mask in range(1 << t.base.vertex_count):
        observed = closure_mask(g, mask)
        if observed == full or closure_mask(g, mask | stem) != full:
            continue
        type_two += 1
        frontier = closed_root & ~observed
        if frontier not in allowed:
            logger.warning(
                "Type II set %s on T+_{%d,%d} leaves frontier %s",
                sorted(utils.iter_bits(mask)),
                m,
                h,
                sorted(utils.iter_bits(frontier)),
            )
            return False

    logger.debug("frontier holds for %d Type II sets on T+_{%d,%d}", type_two, m, h)
    return True
