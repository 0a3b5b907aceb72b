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
Exact counting primitives: binomials, multinomials, count polynomials
and the two-block bracket sum

    <H^l + E^(m-l)>^k = sum over (i_1 <= ... <= i_l | i_(l+1) <= ... <= i_m),
                        i_1 + ... + i_m = k, of
        C(m, l) * multinomial(l; s) * multinomial(m - l; t)
        * prod H[i_j] (j <= l) * prod E[i_j] (j > l)

in two forms: the literal enumeration above and the equivalent
C(m, l) * [x^k] H(x)^l E(x)^(m-l).
"""

import functools
import logging
import math
from collections import Counter
from typing import Iterable, Iterator, Sequence, Tuple

from sympy import Poly, ZZ
from sympy.abc import x

from ..errors import InvalidParameterError

logger = logging.getLogger(__name__)


def binomial(n: int, r: int) -> int:
    if r < 0 or n < 0 or r > n:
        return 0
    return math.comb(n, r)


def multinomial(n: int, parts: Sequence[int]) -> int:
    if any(part < 0 for part in parts):
        raise InvalidParameterError(f"Multinomial parts must be nonnegative: {parts}")
    if sum(parts) != n:
        raise InvalidParameterError(f"Multinomial parts {list(parts)} do not sum to {n}")

    result, remaining = 1, n
    for part in parts:
        result *= math.comb(remaining, part)
        remaining -= part
    return result


class CountPoly:
    """
    Immutable vector of counts, index k holding the count for size k.
    Reading past either end gives 0.
    """

    __slots__ = ("_coefficients",)

    def __init__(self, coefficients: Iterable[int] = ()):
        self._coefficients = tuple(int(c) for c in coefficients)

    @classmethod
    def monomial(cls, degree: int, coefficient: int = 1) -> "CountPoly":
        return cls([0] * degree + [coefficient])

    @property
    def coefficients(self) -> Tuple[int, ...]:
        return self._coefficients

    @property
    def degree(self) -> int:
        """Degree of the normalized form, -1 for the zero polynomial"""
        return len(self.normalized()) - 1

    def __getitem__(self, k: int) -> int:
        if 0 <= k < len(self._coefficients):
            return self._coefficients[k]
        return 0

    def __len__(self) -> int:
        return len(self._coefficients)

    def __iter__(self) -> Iterator[int]:
        return iter(self._coefficients)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CountPoly):
            return NotImplemented
        return self.normalized()._coefficients == other.normalized()._coefficients

    def __hash__(self) -> int:
        return hash(self.normalized()._coefficients)

    def __repr__(self) -> str:
        return f"CountPoly({list(self._coefficients)})"

    def __add__(self, other: "CountPoly") -> "CountPoly":
        size = max(len(self), len(other))
        return CountPoly(self[k] + other[k] for k in range(size))

    def __mul__(self, other: "CountPoly") -> "CountPoly":
        return self.multiply(other)

    def normalized(self) -> "CountPoly":
        coefficients = list(self._coefficients)
        while coefficients and not coefficients[-1]:
            coefficients.pop()
        return CountPoly(coefficients)

    def truncated(self, limit: int) -> "CountPoly":
        """Keep coefficients of degree <= limit"""
        return CountPoly(self._coefficients[: max(limit + 1, 0)])

    def padded(self, size: int) -> "CountPoly":
        return CountPoly(self[k] for k in range(max(size, len(self))))

    def shifted(self, places: int = 1) -> "CountPoly":
        """Multiply by x^places"""
        return CountPoly((0,) * places + self._coefficients)

    def evaluate(self, value: int = 1) -> int:
        return sum(c * value**k for k, c in enumerate(self._coefficients))

    def to_sympy(self) -> Poly:
        return Poly(list(reversed(self.normalized()._coefficients)) or [0], x, domain=ZZ)

    @classmethod
    def from_sympy(cls, poly: Poly) -> "CountPoly":
        return cls(int(c) for c in reversed(poly.all_coeffs())).normalized()

    def multiply(self, other: "CountPoly", limit: int = None) -> "CountPoly":
        product = CountPoly.from_sympy(self.to_sympy() * other.to_sympy())
        return product if limit is None else product.truncated(limit)

    def power(self, exponent: int, limit: int = None) -> "CountPoly":
        result = CountPoly([1])
        for _ in range(exponent):
            result = result.multiply(self, limit)
        return result


@functools.lru_cache(maxsize=None)
def exact_parts_count(k: int, m: int) -> int:
    """Partitions of k into exactly m positive parts: p(k,m)=p(k-1,m-1)+p(k-m,m)"""
    if m < 0 or k < 0:
        return 0
    if m == 0:
        return int(k == 0)
    if k < m:
        return 0

    # row[i] holds p(i, j) for the current number of parts j
    row = [1] + [0] * k
    for j in range(1, m + 1):
        previous, row = row, [0] * (k + 1)
        for i in range(j, k + 1):
            row[i] = previous[i - 1] + row[i - j]
    return row[k]


def partition_count(k: int, m: int) -> int:
    """Partitions of k into at most m parts"""
    if k < 0 or m < 0:
        return 0
    return exact_parts_count(k + m, m)


def nondecreasing_sequences(total: int, length: int) -> Iterator[Tuple[int, ...]]:
    """Non-decreasing tuples of `length` nonnegative ints summing to `total`, lexicographically"""
    if total < 0 or length < 0:
        return
    if length == 0:
        if total == 0:
            yield ()
        return

    stack = [((), total, 0)]
    while stack:
        prefix, remaining, low = stack.pop()
        slots = length - len(prefix)
        if slots == 1:
            yield prefix + (remaining,)
            continue
        # largest part first onto the stack so the smallest is expanded next
        for part in range(remaining // slots, low - 1, -1):
            stack.append((prefix + (part,), remaining - part, part))


def two_block_tuples(m: int, l: int, k: int) -> Iterator[Tuple[int, ...]]:
    """
    Tuples (i_1..i_m) summing to k whose first l entries and last m-l
    entries are each non-decreasing, ordered by the first block total,
    then lexicographically within each block
    """
    if not 0 <= l <= m:
        raise InvalidParameterError(f"Split must be in [0, {m}], got {l}")
    if k < 0:
        return
    for first_total in range(k + 1):
        for first in nondecreasing_sequences(first_total, l):
            for second in nondecreasing_sequences(k - first_total, m - l):
                yield first + second


def multiplicities(block: Sequence[int], k: int) -> Tuple[int, ...]:
    """s_alpha = number of entries equal to alpha, for alpha in [0, k]"""
    counts = Counter(block)
    return tuple(counts[alpha] for alpha in range(k + 1))


def _check_split(m: int, l: int):
    if not 0 <= l <= m:
        raise InvalidParameterError(f"Split must be in [0, {m}], got {l}")


def bracket_literal(
    Hpoly: CountPoly, Epoly: CountPoly, m: int, l: int, k: int
) -> int:
    _check_split(m, l)
    if k < 0:
        return 0

    shuffle = binomial(m, l)
    total = 0
    for tuple_ in two_block_tuples(m, l, k):
        first, second = tuple_[:l], tuple_[l:]
        term = shuffle
        term *= multinomial(l, multiplicities(first, k))
        term *= multinomial(m - l, multiplicities(second, k))
        for i in first:
            term *= Hpoly[i]
        for i in second:
            term *= Epoly[i]
        total += term
    return total


def bracket_series(
    Hpoly: CountPoly, Epoly: CountPoly, m: int, l: int, limit: int
) -> CountPoly:
    """All coefficients up to `limit` of C(m, l) * H(x)^l * E(x)^(m-l)"""
    _check_split(m, l)
    if limit < 0:
        return CountPoly()

    product = Hpoly.truncated(limit).power(l, limit)
    product = product.multiply(Epoly.truncated(limit).power(m - l, limit), limit)
    shuffle = binomial(m, l)
    return CountPoly(shuffle * c for c in product)


def bracket_convolution(
    Hpoly: CountPoly, Epoly: CountPoly, m: int, l: int, k: int
) -> int:
    if k < 0:
        _check_split(m, l)
        return 0
    return bracket_series(Hpoly, Epoly, m, l, k)[k]


BRACKETS = {
    "convolution": bracket_convolution,
    "literal": bracket_literal,
}


def get_bracket(name: str):
    try:
        return BRACKETS[name]
    except KeyError:
        raise InvalidParameterError(
            f"Unknown bracket method {name!r}, expected one of {sorted(BRACKETS)}"
        ) from None


class CountReport:
    """Number of power dominating sets of every size for one tree"""

    def __init__(self, m, h, counts_by_k):
        self.m = m
        self.h = h
        self.counts_by_k = tuple(counts_by_k)

    def __eq__(self, other):
        if not isinstance(other, CountReport):
            return NotImplemented
        return (self.m, self.h, self.counts_by_k) == (
            other.m,
            other.h,
            other.counts_by_k,
        )

    def __repr__(self):
        return f"{type(self).__name__}(m={self.m}, h={self.h}, total={self.total})"

    @property
    def total(self) -> int:
        return sum(self.counts_by_k)

    @property
    def gamma_p(self):
        return next((k for k, c in enumerate(self.counts_by_k) if c), None)

    def to_document(self) -> dict:
        return {
            "m": self.m,
            "h": self.h,
            "counts_by_k": [str(c) for c in self.counts_by_k],
            "total": str(self.total),
            "gamma_p": self.gamma_p,
        }
