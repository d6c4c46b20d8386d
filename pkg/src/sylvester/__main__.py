import sys

from sylvester.cli import main

sys.exit(main())
