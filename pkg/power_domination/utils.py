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

"""Utility functions shared by the graph, counting and output layers"""

import os

from .errors import InvalidParameterError


def get_base_dir():
    """Get directory of this package"""
    return os.path.abspath(os.path.dirname(os.path.abspath(__file__)))


def iter_bits(mask):
    """Yield the positions of set bits, lowest first"""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask):
    return bin(mask).count("1")


def bits_to_mask(vertices):
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def next_combination(mask):
    """Gosper's step: the next larger integer with the same popcount"""
    low = mask & -mask
    ripple = mask + low
    return (((ripple ^ mask) >> 2) // low) | ripple


def check_arity(m):
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise InvalidParameterError(f"Arity must be an integer >= 2, got {m!r}")


def check_height(h):
    if isinstance(h, bool) or not isinstance(h, int) or h < 0:
        raise InvalidParameterError(f"Height must be an integer >= 0, got {h!r}")


def tree_order(m, h):
    """|V(T_{m,h})| = (m^(h+1) - 1) / (m - 1)"""
    return (m ** (h + 1) - 1) // (m - 1)


def round_ratio(numerator, denominator, digits):
    """
    Exact decimal expansion of numerator/denominator,
    rounded half-even to the given number of places
    """
    if denominator <= 0:
        raise InvalidParameterError("Denominator must be positive")
    if digits < 0:
        raise InvalidParameterError("Digit count must be nonnegative")

    sign = "-" if numerator < 0 else ""
    quotient, remainder = divmod(abs(numerator) * 10**digits, denominator)
    twice = 2 * remainder
    if twice > denominator or (twice == denominator and quotient % 2):
        quotient += 1

    whole, frac = divmod(quotient, 10**digits)
    if not digits:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{frac:0{digits}d}"
