import sys

from bncalc.cli import main

sys.exit(main())
