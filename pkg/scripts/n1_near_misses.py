#!/usr/bin/env python3
"""List the N = 1 solutions X^2 + 2^(2a) 5^(2b) p^(2c) = Z^5 with Z <= zmax.

These are what the theorem excludes once N > 1; 41^2 + 2^2 19^2 = 5^5 is the first.
"""

import sys

from quintic_descent.search import theorem_search

z_max = int(sys.argv[1]) if len(sys.argv) > 1 else 60
for h in theorem_search(z_max, [1]).hits:
    s = h.shape
    p = f" {s.p}^{2 * s.gamma}" if s.p else ""
    print(f"{h.X}^2 + 2^{2 * s.alpha} 5^{2 * s.beta}{p} = {h.Z}^5")
