import sys

from shrinkm.cli import main

sys.exit(main())
