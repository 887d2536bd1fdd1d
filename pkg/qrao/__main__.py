import sys

from qrao.cli import main

sys.exit(main())
