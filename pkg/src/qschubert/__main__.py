import sys

from qschubert.cli import main

sys.exit(main())
