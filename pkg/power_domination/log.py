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

_formatter = logging.Formatter

DEFAULT_CAPACITY = 2500


class MemoryHandler(logging.Handler):
    """
    Keeps 2 buffers.
    One for records already passed to the target.
    One for records still held back.
    Once a record at or above the level arrives, everything
    held back is flushed with it, so the target sees the
    debug context leading up to a failure.
    When both buffers together reach capacity the oldest
    handled record is dropped first, then the oldest unused one.
    """

    def __init__(self, target, capacity):
        super().__init__(0)
        self.target = target
        self.capacity = capacity
        self.buffer = []
        self.handledbuffer = []
        self.lvl = logging.WARNING

    def setLevel(self, level):
        self.lvl = level

    def dump(self):
        """Return a list of logging entries"""
        return self.handledbuffer + self.buffer

    def dumps(self, lvl=0):
        """Return all entries of minimum level as list of strings"""
        return [self.target.format(record) for record in self.dump() if record.levelno >= lvl]

    def emit(self, record):
        if len(self.handledbuffer) + len(self.buffer) >= self.capacity:
            (self.handledbuffer or self.buffer).pop(0)
        self.buffer.append(record)
        if self.lvl < 0 or record.levelno < self.lvl:
            return

        with self.lock:
            for held in self.buffer:
                self.target.handle(held)
            room = self.capacity - len(self.buffer)
            self.handledbuffer = (self.handledbuffer[-room:] if room > 0 else []) + self.buffer
            self.buffer = []


def get_memory_handler():
    """The MemoryHandler installed by init(), if any"""
    return next(
        (
            handler
            for handler in logging.getLogger().handlers
            if isinstance(handler, MemoryHandler)
        ),
        None,
    )


def init(level=logging.WARNING, stream=None, capacity=DEFAULT_CAPACITY):
    formatter = _formatter("%(levelname)s:%(name)s:%(message)s", "")
    handler = logging.StreamHandler(stream or sys.stderr)
    handler.setFormatter(formatter)
    memory = MemoryHandler(handler, capacity)
    memory.setLevel(level)
    logging.getLogger().handlers = []
    logging.getLogger().addHandler(memory)
    logging.getLogger().setLevel(0)
    logging.captureWarnings(True)
    return memory
