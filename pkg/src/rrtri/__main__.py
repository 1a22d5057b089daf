import sys

from rrtri.cli import main

sys.exit(main())
