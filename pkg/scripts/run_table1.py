"""Erdos-Renyi corpus, n = 100, p = 1/3, weights 101..200.

Left columns are the best-by-size pick, right columns the best-by-weight pick.
"""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from _tables import main  # noqa: E402

if __name__ == "__main__":
    main(["er:100:1/3"], "table1_er")
