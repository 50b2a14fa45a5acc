#!/usr/bin/env python3
"""Larger theorem sweep with progress on stderr and a resumable checkpoint.

    python scripts/sweep.py --zmax 2000 --workers 8 --checkpoint sweep.jsonl
"""

import argparse
import json
import logging

from quintic_descent.search import DEFAULT_N_VALUES, theorem_search

ap = argparse.ArgumentParser()
ap.add_argument("--zmax", type=int, default=2000)
ap.add_argument("--n", default=",".join(map(str, DEFAULT_N_VALUES)))
ap.add_argument("--workers", type=int, default=4)
ap.add_argument("--checkpoint")
args = ap.parse_args()
logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s")

rep = theorem_search(args.zmax, [int(t) for t in args.n.split(",")], args.workers, args.checkpoint)
print(json.dumps(rep.summary()))
logging.info("%d ms", rep.elapsed_ms)
for h in rep.counterexamples:
    print("COUNTEREXAMPLE", h.as_dict())
