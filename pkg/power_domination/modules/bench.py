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

import logging
import time

from .. import formats, loader
from ..counting import recursive
from ..counting.combinatorics import BRACKETS

logger = logging.getLogger(__name__)


def time_bracket(m, h, bracket, repeat):
    """Best wall time of a full count_series over `repeat` cold runs"""
    best, total = None, None
    for _ in range(repeat):
        recursive.build_tables.cache_clear()
        start = time.perf_counter()
        total = recursive.count_series(m, h, bracket=bracket).evaluate(1)
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, total


class BenchMod(loader.Module):
    """Times the literal bracket against the convolution bracket"""

    strings = {
        "name": "Bench",
        "csv_header": ("bracket", "seconds", "total"),
    }

    def __init__(self):
        self.config = loader.ModuleConfig(
            "bench_repeat",
            3,
            "Timed runs per bracket, the best one is reported",
        )

    def benchcmd(self, config):
        """Timing rows for every bracket evaluation"""
        rows = []
        for bracket in sorted(BRACKETS):
            seconds, total = time_bracket(config.m, config.h, bracket, config.repeat)
            logger.info("%s bracket on T_{%d,%d}: %.6f s", bracket, config.m, config.h, seconds)
            rows.append({"bracket": bracket, "seconds": f"{seconds:.6f}", "total": str(total)})

        if config.format == "json":
            return formats.render_json(rows)
        if config.format == "csv":
            return formats.render_csv(self.strings["csv_header"], rows)
        return formats.render_plain(
            "bench.jinja2", m=config.m, h=config.h, repeat=config.repeat, rows=rows
        )
