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

from .. import formats, loader, utils
from ..counting import oracle, recursive
from ..counting.combinatorics import CountPoly
from ..errors import EXIT_MISMATCH, EXIT_OK
from ..graphs.core import build_complete_tree

logger = logging.getLogger(__name__)


def compare_with_oracle(m, h, cap=oracle.DEFAULT_CAP, workers=1, bracket=recursive.DEFAULT_BRACKET):
    """Recursion against exhaustive enumeration for the N, E and H tables"""
    n = utils.tree_order(m, h)

    # T+ is one vertex larger, so it hits the cap first
    E_oracle, H_oracle, _ = oracle.oracle_type_census(m, h, cap, workers)
    enumerated_report = oracle.OracleReport(
        m, h, oracle.oracle_counts(build_complete_tree(m, h).graph, cap, workers)
    )
    computed_report = recursive.recursive_report(m, h, bracket)

    table = recursive.build_tables(m, h, n, bracket)[-1]
    pairs = {
        "N": (CountPoly(computed_report.counts_by_k), enumerated_report.counts_by_k),
        "E": (table.E, E_oracle),
        "H": (table.H, H_oracle),
    }

    rows = []
    for name, (computed, enumerated) in pairs.items():
        for k in range(n + 1):
            rows.append(
                {
                    "table": name,
                    "k": k,
                    "recursive": str(computed[k]),
                    "oracle": str(enumerated[k]),
                    "match": computed[k] == enumerated[k],
                }
            )

    frontier = oracle.oracle_frontier_check(m, h, cap) if h >= 1 else None
    mismatches = [
        {key: row[key] for key in ("table", "k", "recursive", "oracle")}
        for row in rows
        if not row["match"]
    ]
    for row in mismatches:
        logger.warning("%s[%d] differs: recursion %s, oracle %s", row["table"], row["k"], row["recursive"], row["oracle"])

    return {
        "m": m,
        "h": h,
        "match": not mismatches and frontier is not False,
        "frontier": frontier,
        "compared": len(rows),
        "enumerated": 1 << n,
        "mismatches": mismatches,
        "reports": {
            "recursive": computed_report.to_document(),
            "oracle": enumerated_report.to_document(),
        },
    }, rows


class VerifyMod(loader.Module):
    """Cross-checks the recursion against exhaustive enumeration"""

    strings = {
        "name": "Verify",
        "csv_header": ("table", "k", "recursive", "oracle", "match"),
    }

    def __init__(self):
        self.config = loader.ModuleConfig(
            "oracle_cap",
            oracle.DEFAULT_CAP,
            "Largest vertex count the oracle will enumerate",
            "oracle_workers",
            1,
            "Processes used for enumeration",
        )

    def verifycmd(self, config):
        """Compare N, E and H with the oracle and check the Type II frontier"""
        document, rows = compare_with_oracle(
            config.m, config.h, config.oracle_cap, config.workers, config.bracket
        )
        status = EXIT_OK if document["match"] else EXIT_MISMATCH

        if config.format == "json":
            text = formats.render_json(document)
        elif config.format == "csv":
            text = formats.render_csv(
                self.strings["csv_header"],
                [dict(row, match=str(row["match"]).lower()) for row in rows],
            )
        else:
            text = formats.render_plain("verify.jinja2", **document)

        return loader.CommandResult(text, status)
