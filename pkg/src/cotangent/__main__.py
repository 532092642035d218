import sys

from cotangent.cli import main

sys.exit(main())
