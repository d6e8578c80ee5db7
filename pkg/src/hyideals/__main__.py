"""Allow running with `python -m hyideals`."""

import sys

from hyideals.cli import main

sys.exit(main())
