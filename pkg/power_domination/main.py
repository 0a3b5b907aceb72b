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

import argparse
import logging
from dataclasses import dataclass
from fractions import Fraction

from . import log, loader, utils
from .counting.combinatorics import get_bracket
from .dispatcher import CommandDispatcher
from .errors import InvalidParameterError, PowerDominationError
from .formats import FORMATS, check_format

__version__ = (1, 0, 0)

COMMANDS = ("count", "table", "prob", "sum", "verify", "bench", "threshold")
NEEDS_K = ("count", "prob")

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunConfig:
    command: str
    m: int
    h: int
    k: int = None
    k_max: int = None
    format: str = "plain"
    digits: int = 12
    oracle_cap: int = 25
    bracket: str = "convolution"
    alpha: Fraction = Fraction(1)
    workers: int = 1
    repeat: int = 3

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise InvalidParameterError(f"Unknown command {self.command!r}")
        utils.check_arity(self.m)
        utils.check_height(self.h)
        check_format(self.format)
        get_bracket(self.bracket)

        if self.command in NEEDS_K and self.k is None:
            raise InvalidParameterError(f"Command {self.command!r} needs --k")
        if self.k_max is not None and self.k_max < 0:
            raise InvalidParameterError(f"--k-max must be nonnegative, got {self.k_max}")
        if self.digits < 0:
            raise InvalidParameterError(f"--digits must be nonnegative, got {self.digits}")
        if self.oracle_cap < 0:
            raise InvalidParameterError(f"--oracle-cap must be nonnegative, got {self.oracle_cap}")
        if self.workers < 1 or self.repeat < 1:
            raise InvalidParameterError("Worker and repeat counts must be positive")

    @classmethod
    def from_arguments(cls, arguments, modules):
        return cls(
            command=arguments.command,
            m=arguments.m,
            h=arguments.h,
            k=arguments.k,
            k_max=arguments.k_max,
            format=arguments.format,
            digits=modules.get_config("digits"),
            oracle_cap=modules.get_config("oracle_cap"),
            bracket=modules.get_config("bracket"),
            alpha=arguments.alpha,
            workers=modules.get_config("oracle_workers"),
            repeat=modules.get_config("bench_repeat"),
        )


def parse_arguments(argv=None):
    """Parse the arguments"""
    parser = argparse.ArgumentParser(
        prog="power_domination",
        description="Count power dominating sets of complete m-ary trees",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--m", dest="m", type=int, required=True, help="Arity, at least 2")
    parser.add_argument("--h", dest="h", type=int, required=True, help="Height, at least 0")
    parser.add_argument("--k", dest="k", type=int, help="Monitor set size")
    parser.add_argument("--k-max", dest="k_max", type=int, help="Last row of a table")
    parser.add_argument("--format", dest="format", choices=FORMATS, default="plain")
    parser.add_argument("--digits", dest="digits", type=int, help="Decimal places of approximations")
    parser.add_argument(
        "--oracle-cap",
        dest="oracle_cap",
        type=int,
        help="Largest vertex count the exhaustive oracle will enumerate",
    )
    parser.add_argument("--bracket", dest="bracket", choices=("convolution", "literal"))
    parser.add_argument(
        "--alpha",
        dest="alpha",
        type=Fraction,
        default=Fraction(1),
        help="Target probability for the threshold command, as 0.9 or 9/10",
    )
    parser.add_argument(
        "--version", action="version", version=".".join(map(str, __version__))
    )
    arguments = parser.parse_args(argv)
    logger.debug(arguments)
    return arguments


def main(argv=None):
    """Main entrypoint"""
    arguments = parse_arguments(argv)

    modules = loader.Modules()
    modules.register_all()
    dispatcher = CommandDispatcher(modules)

    try:
        file_config = loader.read_config_file()
        memory = log.get_memory_handler()
        if memory is not None:
            memory.setLevel(loader.resolve("loglevel", logging.WARNING, file_config=file_config))

        modules.send_config(
            {
                "digits": arguments.digits,
                "oracle_cap": arguments.oracle_cap,
                "bracket": arguments.bracket,
            },
            file_config,
        )
        config = RunConfig.from_arguments(arguments, modules)
    except PowerDominationError as e:
        return dispatcher.report_error(e)

    return dispatcher.handle_command(config)
