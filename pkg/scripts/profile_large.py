"""Time-budgeted run on a large sun graph, writing a performance-profile trace.

Defaults (delta=1250, 1800 s) match the large-instance setting; use a smaller
--budget for a quick look. Results depend on the machine.
"""

import argparse
import time

from wdom.experiments import profile, trace_csv
from wdom.generators import GenSpec, generate

ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
ap.add_argument("--delta", type=int, default=1250)
ap.add_argument("--variant", default="t6", choices=("t3", "t5", "t6"))
ap.add_argument("--budget", type=float, default=1800.0)
ap.add_argument("--seed", type=int, default=1)
ap.add_argument("-o", "--output", default="profile.csv")
args = ap.parse_args()

t0 = time.perf_counter()
g = generate(GenSpec("sun", delta=args.delta, seed=args.seed))
print(f"sun({args.delta}): n={g.n} m={g.m}, built in {time.perf_counter() - t0:.1f} s")
trace = profile(g, args.variant, args.budget, seed=args.seed)
with open(args.output, "w") as fh:
    fh.write(trace_csv(trace))
t, size, weight = trace[-2]
print(f"{args.variant}: best size {trace[-1][1]}, best weight {trace[-1][2]:g} "
      f"(last improvement at {t:.1f} s); {len(trace) - 1} improvements -> {args.output}")
