# vim:ts=4:sw=4:softtabstop=4:smarttab:expandtab

import sys

from .commands import main

sys.exit(main())
