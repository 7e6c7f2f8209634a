import sys

from countability.cli import main

sys.exit(main())
