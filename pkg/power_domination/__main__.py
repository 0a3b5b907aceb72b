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


"""Initial entrypoint"""

import sys

if sys.version_info < (3, 8, 0):
    print("Error: power_domination needs Python 3.8 or newer")  # pragma: no cover
    sys.exit(1)
elif __package__ != "power_domination":  # run as a plain script
    print(
        "Error: run this as a package: python3 -m power_domination"
    )  # pragma: no cover
    sys.exit(1)
else:
    from . import log

    log.init()
    try:
        from . import main
    except ModuleNotFoundError as e:  # pragma: no cover
        print(
            f"Error: missing dependency {e.name!r}, install it with\n"
            "pip3 install -r requirements.txt"
        )
        sys.exit(1)

    if __name__ == "__main__":
        sys.exit(main.main())
