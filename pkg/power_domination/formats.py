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
Serialization of result documents.
Exact quantities are always decimal strings, never json numbers.
"""

import csv
import functools
import io
import json
import os
from fractions import Fraction

import jinja2

from . import utils
from .counting import recursive
from .counting.combinatorics import binomial
from .errors import InvalidParameterError

FORMATS = ("json", "csv", "plain")
TABLE_HEADER = ("k", "N", "binom", "prob_num", "prob_den", "prob_approx")


def check_format(fmt):
    if fmt not in FORMATS:
        raise InvalidParameterError(f"Format must be one of {list(FORMATS)}, got {fmt!r}")


@functools.lru_cache(maxsize=None)
def get_environment():
    environment = jinja2.Environment(
        loader=jinja2.FileSystemLoader(os.path.join(utils.get_base_dir(), "templates")),
        keep_trailing_newline=True,
        trim_blocks=True,
        lstrip_blocks=True,
        undefined=jinja2.StrictUndefined,
    )
    environment.filters["rjust"] = lambda value, width: str(value).rjust(width)
    return environment


def render_plain(template, **context):
    return get_environment().get_template(template).render(**context)


def render_json(document):
    return json.dumps(document, separators=(",", ":")) + "\n"


def render_csv(header, rows):
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(header)
    writer.writerows([row[column] for column in header] for row in rows)
    return out.getvalue()


def ratio_document(value: Fraction, digits):
    return {
        "num": str(value.numerator),
        "den": str(value.denominator),
        "approx": utils.round_ratio(value.numerator, value.denominator, digits),
    }


def table_rows(m, h, k_max=None, digits=12, bracket=recursive.DEFAULT_BRACKET):
    """One row per k in [0, min(k_max, n)], ascending"""
    n = utils.tree_order(m, h)
    series = recursive.count_series(m, h, k_max, bracket)
    rows = []
    for k in range(len(series)):
        total = binomial(n, k)
        ratio = ratio_document(Fraction(series[k], total), digits)
        rows.append(
            {
                "k": k,
                "N": str(series[k]),
                "binom": str(total),
                "prob_num": ratio["num"],
                "prob_den": ratio["den"],
                "prob_approx": ratio["approx"],
            }
        )
    return rows


def emit_table(m, h, k_max=None, fmt="csv", digits=12, bracket=recursive.DEFAULT_BRACKET):
    check_format(fmt)
    if k_max is not None and k_max < 0:
        raise InvalidParameterError(f"k_max must be nonnegative, got {k_max}")

    rows = table_rows(m, h, k_max, digits, bracket)
    if fmt == "json":
        return render_json(rows)
    if fmt == "csv":
        return render_csv(TABLE_HEADER, rows)

    widths = {
        column: max(len(column), *(len(str(row[column])) for row in rows))
        for column in TABLE_HEADER
    }
    return render_plain("table.jinja2", m=m, h=h, rows=rows, header=TABLE_HEADER, widths=widths)
