"""Run the command line interface with ``python -m oockit``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
