"""Exhaustive and residue-class verification of the descent argument for
X^(2N) + 2^(2a) 5^(2b) p^(2c) = Z^5 (no coprime solutions once N > 1)."""

__version__ = "0.1.0"
