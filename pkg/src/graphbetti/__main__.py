import sys

from graphbetti.cli import main

sys.exit(main())
