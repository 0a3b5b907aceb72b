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
import sys

from .errors import EXIT_MISMATCH, EXIT_OK, PowerDominationError
from .loader import CommandResult

logger = logging.getLogger(__name__)


class CommandDispatcher:
    def __init__(self, modules):
        self._modules = modules

    @staticmethod
    def report_error(error):
        logger.error("%s failed: %s", type(error).__name__, error)
        sys.stderr.write(f"Error: {error}\n")
        return error.exit_code

    def handle_command(self, config):
        """Run one command and write its document to stdout, returning the exit status"""
        func = self._modules.dispatch(config.command)
        if func is None:
            logger.error("No module provides the %r command", config.command)
            return EXIT_MISMATCH

        logger.debug("dispatching %s to %r", config.command, func)
        try:
            result = func(config)
        except PowerDominationError as e:
            return self.report_error(e)
        except Exception:
            logger.exception("Command %s failed", config.command)
            return EXIT_MISMATCH

        if not isinstance(result, CommandResult):
            result = CommandResult(result)

        sys.stdout.write(result.text)
        sys.stdout.flush()
        if result.exit_code != EXIT_OK:
            logger.warning("%s finished with exit status %d", config.command, result.exit_code)
        return result.exit_code
