import sys

from lcadag.lca_cli import main

sys.exit(main())
