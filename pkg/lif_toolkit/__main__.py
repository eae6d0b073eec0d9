import sys

from lif_toolkit.app import main

sys.exit(main())
