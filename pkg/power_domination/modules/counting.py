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
from fractions import Fraction

from .. import formats, loader, utils
from ..counting import recursive

logger = logging.getLogger(__name__)


class CountingMod(loader.Module):
    """Exact counts and probabilities from the E/H recursion"""

    strings = {
        "name": "Counting",
        "count_header": ("m", "h", "k", "N"),
        "prob_header": ("num", "den", "approx"),
        "sum_header": ("m", "h", "total"),
        "threshold_header": (
            "m",
            "h",
            "alpha",
            "k",
            "n",
            "ratio_num",
            "ratio_den",
            "ratio_approx",
        ),
    }

    def __init__(self):
        self.config = loader.ModuleConfig(
            "digits",
            12,
            "Decimal places of rounded probabilities",
            "bracket",
            recursive.DEFAULT_BRACKET,
            "Bracket evaluation, convolution or literal",
        )

    def _render(self, config, name, document, plain):
        if config.format == "json":
            return formats.render_json(document)
        if config.format == "csv":
            return formats.render_csv(self.strings[f"{name}_header"], [document])
        return plain

    def countcmd(self, config):
        """N(m, h, k), the number of k-subsets that power dominate T_{m,h}"""
        value = recursive.count_pds(config.m, config.h, config.k, config.bracket)
        document = {"m": config.m, "h": config.h, "k": config.k, "N": str(value)}
        return self._render(config, "count", document, f"{value}\n")

    def probcmd(self, config):
        """p(m, h, k) as an exact fraction and a rounded decimal"""
        value = recursive.probability(config.m, config.h, config.k, config.bracket)
        document = formats.ratio_document(value, config.digits)
        return self._render(
            config,
            "prob",
            document,
            f"{document['num']}/{document['den']} {document['approx']}\n",
        )

    def tablecmd(self, config):
        """N, C(n, k) and p for every k up to --k-max"""
        return formats.emit_table(
            config.m, config.h, config.k_max, config.format, config.digits, config.bracket
        )

    def sumcmd(self, config):
        """Total number of power dominating sets of T_{m,h}"""
        total = recursive.total_pds(config.m, config.h, config.bracket)
        document = {"m": config.m, "h": config.h, "total": str(total)}
        return self._render(config, "sum", document, f"{total}\n")

    def thresholdcmd(self, config):
        """Smallest k whose probability reaches --alpha"""
        k = recursive.threshold_size(config.m, config.h, config.alpha, config.bracket)
        n = utils.tree_order(config.m, config.h)
        ratio = formats.ratio_document(Fraction(k, n), config.digits)
        logger.debug("threshold for alpha=%s on T_{%d,%d} is %d", config.alpha, config.m, config.h, k)

        document = {
            "m": config.m,
            "h": config.h,
            "alpha": str(config.alpha),
            "k": k,
            "n": n,
            "ratio_num": ratio["num"],
            "ratio_den": ratio["den"],
            "ratio_approx": ratio["approx"],
        }
        plain = formats.render_plain(
            "threshold.jinja2",
            m=config.m,
            h=config.h,
            alpha=config.alpha,
            k=k,
            n=n,
            ratio=ratio,
        )
        return self._render(config, "threshold", document, plain)
