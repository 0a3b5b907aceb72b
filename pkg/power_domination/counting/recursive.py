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
Bottom-up E/H tables and the counts N(m, h, k) built from them.

E[k] counts Type I sets of size k on T+_{m,h}, H[k] counts Type II sets.
A height is lifted from the one below through the bracket polynomials
b_l = C(m, l) H^l E^(m-l):

    odd h:  H = b_1,  E = b_0 + x * sum(b)
    even h: H = b_m,  E = b_0 + ... + b_(m-1) + x * sum(b)

and the tree itself is counted with

    odd h:  N = b_0 + b_1 + x * sum(b)
    even h: N = b_0 + ... + b_(m-1) + x * sum(b)

taken at height h-1. Heights 0 and 1 use closed forms.
"""

import functools
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .. import utils
from ..errors import InvalidParameterError
from .combinatorics import (
    CountPoly,
    CountReport,
    binomial,
    bracket_literal,
    bracket_series,
    get_bracket,
)

logger = logging.getLogger(__name__)

ExactRatio = Fraction

DEFAULT_BRACKET = "convolution"


@dataclass(frozen=True)
class CountTable:
    m: int
    h: int
    E: CountPoly
    H: CountPoly
    k_max: int = None

    @property
    def odd(self) -> bool:
        return bool(self.h % 2)

    @property
    def monitor_count(self) -> int:
        """|V(T+_{m,h})| - 1, the vertices allowed to hold a monitor"""
        return utils.tree_order(self.m, self.h)


def base_table(m: int, h: int) -> CountTable:
    utils.check_arity(m)
    if h == 0:
        return CountTable(m, 0, CountPoly([0, 1]), CountPoly([1]))
    if h == 1:
        E = CountPoly(m + 1 if k == m else binomial(m, k - 1) for k in range(m + 2))
        return CountTable(m, 1, E, CountPoly.monomial(m - 1, m))

    raise InvalidParameterError(f"Base tables exist for heights 0 and 1, not {h!r}")


def _bracket_polys(prev: CountTable, k_max: int, bracket: str) -> List[CountPoly]:
    """b_0 .. b_m at the height of `prev`, every coefficient up to k_max"""
    m = prev.m
    if bracket == "convolution":
        return [bracket_series(prev.H, prev.E, m, l, k_max) for l in range(m + 1)]

    evaluate = get_bracket(bracket)
    return [
        CountPoly(evaluate(prev.H, prev.E, m, l, k) for k in range(k_max + 1))
        for l in range(m + 1)
    ]


def _with_root(polys: List[CountPoly], k_max: int) -> CountPoly:
    """Sets containing the root: every split, one monitor spent on r"""
    return sum(polys, CountPoly()).shifted(1).truncated(k_max)


def lift_table(
    prev: CountTable, k_max: int, bracket: str = DEFAULT_BRACKET
) -> CountTable:
    m, h = prev.m, prev.h + 1
    polys = _bracket_polys(prev, k_max, bracket)
    with_root = _with_root(polys, k_max)

    if h % 2:
        H = polys[1]
        E = polys[0] + with_root
    else:
        H = polys[m]
        E = sum(polys[:m], CountPoly()) + with_root

    logger.debug("lifted E/H tables for m=%d to h=%d (k_max=%d)", m, h, k_max)
    return CountTable(
        m, h, E.truncated(k_max).normalized(), H.truncated(k_max).normalized(), k_max
    )


@functools.lru_cache(maxsize=64)
def build_tables(
    m: int, h: int, k_max: int, bracket: str = DEFAULT_BRACKET
) -> Tuple[CountTable, ...]:
    """Tables for heights 0 .. h, exact for every k <= k_max"""
    utils.check_arity(m)
    utils.check_height(h)
    get_bracket(bracket)

    tables = [base_table(m, 0)]
    if h >= 1:
        tables.append(base_table(m, 1))
    while len(tables) <= h:
        tables.append(lift_table(tables[-1], k_max, bracket))
    return tuple(tables)


def count_series(
    m: int, h: int, k_max: int = None, bracket: str = DEFAULT_BRACKET
) -> CountPoly:
    """N(m, h, k) for every k in [0, min(k_max, n)]"""
    utils.check_arity(m)
    utils.check_height(h)
    get_bracket(bracket)

    n = utils.tree_order(m, h)
    limit = n if k_max is None else min(k_max, n)
    if limit < 0:
        return CountPoly()

    if h == 0:
        series = CountPoly([0, 1])
    elif h == 1:
        series = CountPoly(
            binomial(m, k - 1) + (binomial(m, k) if k in (m - 1, m) else 0)
            for k in range(m + 2)
        )
    else:
        prev = build_tables(m, h - 1, limit, bracket)[-1]
        polys = _bracket_polys(prev, limit, bracket)
        without_root = polys[:2] if h % 2 else polys[:m]
        series = sum(without_root, CountPoly()) + _with_root(polys, limit)

    return series.truncated(limit).padded(limit + 1)


def count_pds(m: int, h: int, k: int, bracket: str = DEFAULT_BRACKET) -> int:
    utils.check_arity(m)
    utils.check_height(h)
    if k < 0 or k > utils.tree_order(m, h):
        return 0
    return count_series(m, h, k, bracket)[k]


def probability(m: int, h: int, k: int, bracket: str = DEFAULT_BRACKET) -> ExactRatio:
    utils.check_arity(m)
    utils.check_height(h)
    n = utils.tree_order(m, h)
    if not 0 <= k <= n:
        raise InvalidParameterError(f"Size k must be in [0, {n}] for T_{{{m},{h}}}, got {k}")
    return Fraction(count_pds(m, h, k, bracket), binomial(n, k))


def total_pds(m: int, h: int, bracket: str = DEFAULT_BRACKET) -> int:
    return count_series(m, h, bracket=bracket).evaluate(1)


def recursive_report(m: int, h: int, bracket: str = DEFAULT_BRACKET) -> CountReport:
    return CountReport(m, h, count_series(m, h, bracket=bracket))


def gamma_p_via_counts(m: int, h: int, bracket: str = DEFAULT_BRACKET) -> int:
    return recursive_report(m, h, bracket).gamma_p


def threshold_size(m: int, h: int, alpha, bracket: str = DEFAULT_BRACKET) -> int:
    """Smallest k with p(m, h, k) >= alpha"""
    alpha = Fraction(alpha)
    if not 0 < alpha <= 1:
        raise InvalidParameterError(f"Alpha must be in (0, 1], got {alpha}")

    n = utils.tree_order(m, h)
    series = count_series(m, h, bracket=bracket)
    for k in range(n + 1):
        if Fraction(series[k], binomial(n, k)) >= alpha:
            return k

    raise AssertionError("the full vertex set always power dominates")


def coverage_size(m: int, h: int, bracket: str = DEFAULT_BRACKET) -> Tuple[int, Fraction]:
    """Smallest k at which every k-subset power dominates, and k/n"""
    k = threshold_size(m, h, 1, bracket)
    return k, Fraction(k, utils.tree_order(m, h))


def height_two_tables(m: int) -> CountTable:
    """
    T+_{m,2} tables evaluated straight from the height-1 closed forms
    with the literal bracket, independent of lift_table
    """
    prev = base_table(m, 1)
    n = utils.tree_order(m, 2)
    H = CountPoly(bracket_literal(prev.H, prev.E, m, m, k) for k in range(n + 1))
    E = CountPoly(
        sum(bracket_literal(prev.H, prev.E, m, l, k) for l in range(m))
        + sum(bracket_literal(prev.H, prev.E, m, l, k - 1) for l in range(m + 1))
        for k in range(n + 1)
    )
    return CountTable(m, 2, E.normalized(), H.normalized(), n)
