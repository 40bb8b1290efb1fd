import sys

from compositae.cli import main

sys.exit(main())
