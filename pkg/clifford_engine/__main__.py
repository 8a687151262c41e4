from __future__ import annotations

import sys

from clifford_engine.cli.main import main

sys.exit(main())
