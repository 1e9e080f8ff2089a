import sys

from thetalab.main import main

sys.exit(main())
