"""Module entry point: python -m torigid."""

import sys

from .cli import main

sys.exit(main())
