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

"""Loads command modules from disk and resolves their configuration"""

import collections
import importlib.util
import json
import logging
import os
import sys

from . import utils
from .errors import InvalidParameterError

logger = logging.getLogger(__name__)

MODULES_NAME = "modules"
CONFIG_ENV = "POWERDOM_CONFIG"
ENV_PREFIX = "POWERDOM_"


def config_path():
    return os.environ.get(CONFIG_ENV, "config.json")


def read_config_file(path=None):
    """Contents of the json config file, {} when there is none"""
    path = path or config_path()
    try:
        with open(path, "r") as f:
            config = json.loads(f.read())
    except FileNotFoundError:
        return {}
    except json.JSONDecodeError as e:
        raise InvalidParameterError(f"Config file {path} is not valid json: {e}") from e

    if not isinstance(config, dict):
        raise InvalidParameterError(f"Config file {path} must hold a json object")
    return config


def coerce(key, value, default):
    """Convert a file or environment value to the type of the default"""
    if default is None or isinstance(value, type(default)) and not isinstance(value, bool):
        return value
    try:
        return type(default)(value)
    except (TypeError, ValueError):
        raise InvalidParameterError(
            f"Config key {key!r} expects {type(default).__name__}, got {value!r}"
        ) from None


def resolve(key, default, override=None, file_config=None):
    """Explicit override, then config file, then environment, then default"""
    if override is not None:
        value = override
    elif file_config and key in file_config:
        value = file_config[key]
    else:
        value = os.environ.get(f"{ENV_PREFIX}{key.upper()}", default)
    return coerce(key, value, default)


CommandResult = collections.namedtuple("CommandResult", ("text", "exit_code"), defaults=(0,))


class ModuleConfig(dict):
    """Config values keyed by name, remembering each key's default and help text"""

    def __init__(self, *entries):
        if len(entries) % 3:
            raise TypeError("ModuleConfig takes (key, default, doc) triples")

        triples = [entries[i : i + 3] for i in range(0, len(entries), 3)]
        super().__init__((key, default) for key, default, _ in triples)
        self._defaults = dict(self)
        self._docstrings = {key: doc for key, _, doc in triples}

    def getdoc(self, key):
        return self._docstrings[key]

    def getdef(self, key):
        return self._defaults[key]


class Module:
    """Base for command modules; subclasses end in Mod"""

    strings = {"name": "Unknown"}


def get_commands(mod):
    """Map command name -> bound method for every *cmd method"""
    commands = {}
    for name in dir(mod):
        if name.endswith("cmd") and name != "cmd" and callable(getattr(mod, name)):
            commands[name[: -len("cmd")]] = getattr(mod, name)
    return commands


def _module_files():
    directory = os.path.join(utils.get_base_dir(), MODULES_NAME)
    return [
        os.path.join(directory, name)
        for name in sorted(os.listdir(directory))
        if name.endswith(".py") and not name.startswith("_")
    ]


class Modules:
    """Registry of module instances and the commands they expose"""

    def __init__(self):
        self.commands = {}
        self.modules = []

    def register_all(self, mods=None):
        mods = mods or _module_files()
        logger.debug("registering %s", mods)

        for path in mods:
            stem = os.path.splitext(os.path.basename(path))[0]
            module_name = f"{__package__}.{MODULES_NAME}.{stem}"
            spec = importlib.util.spec_from_file_location(module_name, path)
            self.register_module(spec, module_name)

    def register_module(self, spec, module_name):
        """Execute (or reuse) the module and register its Mod class"""
        module = sys.modules.get(module_name)
        if module is None:
            module = importlib.util.module_from_spec(spec)
            sys.modules[module_name] = module
            spec.loader.exec_module(module)

        classes = [
            value
            for key, value in vars(module).items()
            if key.endswith("Mod") and isinstance(value, type) and issubclass(value, Module)
        ]
        if not classes:
            raise TypeError(f"{module_name} defines no Module subclass")

        instance = classes[-1]()
        self.complete_registration(instance)
        return instance

    def complete_registration(self, instance):
        name = type(instance).__name__
        stale = [mod for mod in self.modules if type(mod).__name__ == name]
        if stale:
            logger.debug("Replacing module %r", stale[0])
        self.modules = [mod for mod in self.modules if type(mod).__name__ != name] + [instance]

        instance.commands = get_commands(instance)
        self.register_commands(instance)

    def register_commands(self, instance):
        for command, func in instance.commands.items():
            key = command.lower()
            if key in self.commands:
                logger.debug("Command %s overridden by %s", key, instance.strings["name"])
            if not func.__doc__:
                logger.debug("Command %s has no help text", key)
            self.commands[key] = func

    def dispatch(self, command):
        """Handler for a command name, None if nothing registered it"""
        return self.commands.get(command.lower())

    def send_config(self, overrides=None, file_config=None):
        if file_config is None:
            file_config = read_config_file()
        for mod in self.modules:
            self.send_config_one(mod, overrides or {}, file_config)

    @staticmethod
    def send_config_one(mod, overrides, file_config):
        """Send config to single instance"""
        config = getattr(mod, "config", None)
        for key in config or ():
            config[key] = resolve(key, config.getdef(key), overrides.get(key), file_config)

    def get_config(self, key):
        """Resolved value of a config key from whichever module declares it"""
        for mod in self.modules:
            if key in getattr(mod, "config", {}):
                return mod.config[key]
        raise KeyError(key)
