import sys

from fusionframe.cli.main import main

sys.exit(main())
