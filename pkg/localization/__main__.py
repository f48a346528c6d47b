# Import built-in modules
import sys

# Import local modules
from localization.cli import main


sys.exit(main())
