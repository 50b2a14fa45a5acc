"""Desk-scale sweep of X^(2N) + 2^(2a) 5^(2b) p^(2c) = Z^5 over coprime X, Z.

The Z range is cut into chunks that are scanned independently (optionally in
a process pool) and merged in canonical (N, Z, X) order, so the hit list does
not depend on the partition.  Finished chunks can be appended to a JSON-lines
checkpoint and skipped on a rerun.
"""

from __future__ import annotations

import json
import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .arith import PowerShape, nth_root_floor, power_shape

log = logging.getLogger(__name__)

# any N > 1 has a prime factor, so primes suffice
DEFAULT_N_VALUES = (2, 3, 5, 7, 11, 13)


@dataclass(frozen=True, order=True)
class Hit:
    N: int
    Z: int
    X: int
    shape: PowerShape = field(compare=False)

    def verify(self) -> bool:
        return (self.X ** (2 * self.N) + self.shape.value() == self.Z**5
                and math.gcd(self.X, self.Z) == 1)

    def as_dict(self) -> dict:
        return {"N": self.N, "X": self.X, "Z": self.Z, **self.shape.as_dict()}

    @classmethod
    def from_dict(cls, d: dict) -> "Hit":
        return cls(d["N"], d["Z"], d["X"], PowerShape(d["alpha"], d["beta"], d["gamma"], d["p"]))


@dataclass
class SearchReport:
    z_max: int
    n_values: list[int]
    hits: list[Hit]
    elapsed_ms: int = 0
    pairs_scanned: int = 0

    @property
    def counterexamples(self) -> list[Hit]:
        return [h for h in self.hits if h.N > 1]

    def summary(self) -> dict:
        return {"z_max": self.z_max, "n_values": self.n_values, "hits": len(self.hits),
                "counterexamples": len(self.counterexamples), "pairs_scanned": self.pairs_scanned}


def scan_range(z_lo: int, z_hi: int, n_values: Sequence[int]) -> tuple[list[Hit], int]:
    """All hits with z_lo <= Z <= z_hi; returns (hits, number of (N, X, Z) candidates)."""
    hits = []
    scanned = 0
    # D = Z^5 - X^(2N) must be 0 mod 4 and gcd(X, Z) = 1, so X and Z are both odd
    for Z in range(max(z_lo, 2) | 1, z_hi + 1, 2):
        z5 = Z**5
        for N in n_values:
            x_max, exact = nth_root_floor(z5, 2 * N)
            if exact:
                x_max -= 1
            for X in range(1, x_max + 1, 2):
                scanned += 1
                D = z5 - X ** (2 * N)
                if D & 3 or math.gcd(X, Z) != 1:
                    continue
                shape = power_shape(D)
                if shape is not None:
                    hits.append(Hit(N, Z, X, shape))
    return hits, scanned


def partition(z_max: int, chunks: int, z_min: int = 2) -> list[tuple[int, int]]:
    """Split [z_min, z_max] into at most ``chunks`` contiguous ranges of near-equal work (~Z^3.5)."""
    chunks = max(1, min(chunks, z_max - z_min + 1))
    total = z_max**3.5 - z_min**3.5
    bounds = [z_min]
    for i in range(1, chunks):
        b = math.ceil((z_min**3.5 + total * i / chunks) ** (1 / 3.5))
        if bounds[-1] < b <= z_max:
            bounds.append(b)
    bounds.append(z_max + 1)
    return [(lo, hi - 1) for lo, hi in zip(bounds, bounds[1:])]


def _read_checkpoint(path: Path, n_values: list[int]) -> dict[tuple[int, int], tuple[list[Hit], int]]:
    done = {}
    if not path.exists():
        return done
    for line in path.read_text("utf-8").splitlines():
        if not line.strip():
            continue
        rec = json.loads(line)
        if rec["n_values"] != n_values:
            continue
        done[(rec["z_lo"], rec["z_hi"])] = ([Hit.from_dict(h) for h in rec["hits"]], rec["pairs_scanned"])
    return done


def _append_checkpoint(path: Path, z_lo, z_hi, n_values, hits, scanned):
    rec = {"z_lo": z_lo, "z_hi": z_hi, "n_values": n_values,
           "hits": [h.as_dict() for h in sorted(hits)], "pairs_scanned": scanned}
    with path.open("a", encoding="utf-8") as fh:
        fh.write(json.dumps(rec, separators=(", ", ": ")) + "\n")


def theorem_search(z_max: int, n_values: Iterable[int] = DEFAULT_N_VALUES, workers: int = 1,
                   checkpoint: Optional[str | Path] = None, chunks: Optional[int] = None) -> SearchReport:
    """Every (N, X, Z) with Z <= z_max, X^(2N) < Z^5, gcd(X, Z) = 1 and Z^5 - X^(2N) of the
    form 2^(2a) 5^(2b) p^(2c), a >= 1.  Hits with N > 1 are reported as counterexamples."""
    if z_max < 2:
        raise ValueError("z_max must be >= 2")
    n_values = sorted(set(n_values))
    if not n_values or n_values[0] < 1:
        raise ValueError("n values must be >= 1")
    t0 = time.perf_counter()
    ranges = partition(z_max, chunks or max(1, workers) * 4)
    ckpt = Path(checkpoint) if checkpoint else None
    done = _read_checkpoint(ckpt, n_values) if ckpt else {}
    todo = [r for r in ranges if r not in done]
    if done:
        log.info("checkpoint: %d of %d chunks already done", len(ranges) - len(todo), len(ranges))

    results = {r: done[r] for r in ranges if r in done}
    if workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = {r: pool.submit(scan_range, r[0], r[1], n_values) for r in todo}
            for r in todo:
                results[r] = futures[r].result()
                if ckpt:
                    _append_checkpoint(ckpt, *r, n_values, *results[r])
    else:
        for r in todo:
            results[r] = scan_range(r[0], r[1], n_values)
            if ckpt:
                _append_checkpoint(ckpt, *r, n_values, *results[r])
            log.debug("chunk %s done", r)

    hits = sorted(h for r in ranges for h in results[r][0])
    scanned = sum(results[r][1] for r in ranges)
    return SearchReport(z_max, n_values, hits, int((time.perf_counter() - t0) * 1000), scanned)
