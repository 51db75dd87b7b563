import sys

from reslat.cli import main

sys.exit(main())
