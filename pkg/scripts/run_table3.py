"""Sun-graph corpus, delta = 50 (245 vertices), weights 101..200."""

import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))
from _tables import main  # noqa: E402

if __name__ == "__main__":
    main(["sun:50"], "table3_sun")
