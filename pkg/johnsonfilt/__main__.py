import sys

from johnsonfilt.cli import main

sys.exit(main())
