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

"""Exceptions raised by the library, each knowing its CLI exit status"""

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_INVALID = 2
EXIT_CAPACITY = 3


class PowerDominationError(Exception):
    exit_code = EXIT_MISMATCH

    def __init__(self, error_message):  # skipcq: PYL-W0231
        self._error = error_message

    def __str__(self) -> str:
        return self._error


class InvalidParameterError(PowerDominationError, ValueError):
    """Parameters outside the domain the counts are defined on"""

    exit_code = EXIT_INVALID


class CapacityError(PowerDominationError):
    """Exhaustive enumeration refused because the graph is too large"""

    exit_code = EXIT_CAPACITY

    def __init__(self, vertex_count, cap):
        super().__init__(
            f"Oracle capacity exceeded: {vertex_count} vertices, cap is {cap}"
        )
        self.vertex_count = vertex_count
        self.cap = cap
