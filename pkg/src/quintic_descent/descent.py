"""Parametrization of primitive solutions of x^2 + y^2 = z^5.

Every primitive solution is, up to signs, (u q_x(u, v), v q_y(u, v), u^2 + v^2)
for coprime (u, v) of opposite parity, where

    q_x(u, v) = u^4 - 10 u^2 v^2 + 5 v^4
    q_y(u, v) = v^4 - 10 u^2 v^2 + 5 u^4

i.e. x + iy = (u + iv)^5.  ``oracle_enumerate`` checks this independently by
scanning x and testing z^5 - x^2 for squareness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass(frozen=True)
class UVPair:
    u: int
    v: int
    allow_degenerate: bool = field(default=False, compare=False, repr=False)

    def __post_init__(self):
        if math.gcd(self.u, self.v) != 1:
            raise ValueError(f"u={self.u}, v={self.v} are not coprime")
        if (self.u - self.v) % 2 == 0:
            raise ValueError(f"u={self.u}, v={self.v} do not have opposite parity")
        if self.u * self.v == 0 and not self.allow_degenerate:
            raise ValueError("u and v must be nonzero")


@dataclass(frozen=True, order=True)
class QuinticSolution:
    x: int
    y: int
    z: int

    def __post_init__(self):
        if self.x * self.x + self.y * self.y != self.z ** 5:
            raise ValueError(f"({self.x}, {self.y}, {self.z}) is not a solution of x^2 + y^2 = z^5")

    @property
    def primitive(self) -> bool:
        return math.gcd(self.x, self.y) == 1

    def canonical(self) -> "QuinticSolution":
        """Representative of the sign orbit {(+-x, +-y, z)}."""
        return QuinticSolution(abs(self.x), abs(self.y), self.z)

    def sort_key(self):
        return (self.z, abs(self.x), abs(self.y))


def _uv(pair) -> tuple[int, int]:
    if isinstance(pair, UVPair):
        return pair.u, pair.v
    u, v = pair
    return u, v


def quartic_x(pair) -> int:
    u, v = _uv(pair)
    return u**4 - 10 * u * u * v * v + 5 * v**4


def quartic_y(pair) -> int:
    u, v = _uv(pair)
    return v**4 - 10 * u * u * v * v + 5 * u**4


def parametrize(pair) -> QuinticSolution:
    u, v = _uv(pair)
    return QuinticSolution(u * quartic_x((u, v)), v * quartic_y((u, v)), u * u + v * v)


@dataclass
class Enumeration:
    solutions: list[QuinticSolution]
    # pairs whose triple came out with gcd(x, y) > 1 and was dropped
    non_primitive: list[tuple[int, int]]


def _sweep(z_max: int, z_min: int = 1) -> Enumeration:
    if z_max < 1:
        raise ValueError("z_max must be >= 1")
    seen: set[QuinticSolution] = set()
    dropped = []
    r = math.isqrt(z_max)
    # (u, v) and (-u, -v) give the same triple, so take v >= 0 and u > 0 when v == 0
    for v in range(0, r + 1):
        for u in range(-r, r + 1):
            if v == 0 and u <= 0:
                continue
            n = u * u + v * v
            if n < z_min or n > z_max or (u - v) % 2 == 0 or math.gcd(u, v) != 1:
                continue
            sol = parametrize((u, v))
            if not sol.primitive:
                dropped.append((u, v))
                continue
            seen.add(sol.canonical())
    return Enumeration(sorted(seen, key=QuinticSolution.sort_key), sorted(dropped))


def enumerate_primitive(z_max: int, z_min: int = 1) -> list[QuinticSolution]:
    """Canonical primitive solutions with z_min <= z <= z_max from the (u, v) sweep."""
    return _sweep(z_max, z_min).solutions


def oracle_enumerate(z_max: int, z_min: int = 1) -> list[QuinticSolution]:
    """Brute force: for each z scan 0 <= x <= sqrt(z^5) and test z^5 - x^2 for squareness."""
    if z_max < 1:
        raise ValueError("z_max must be >= 1")
    found = []
    for z in range(max(z_min, 1), z_max + 1):
        z5 = z**5
        for x in range(math.isqrt(z5) + 1):
            d = z5 - x * x
            y = math.isqrt(d)
            if y * y == d and math.gcd(x, y) == 1:
                found.append(QuinticSolution(x, y, z))
    return sorted(found, key=QuinticSolution.sort_key)


@dataclass
class CompletenessReport:
    z_max: int
    parametrized: list[QuinticSolution]
    oracle: list[QuinticSolution]
    missing_from_parametrization: list[QuinticSolution]
    missing_from_oracle: list[QuinticSolution]
    non_primitive_pairs: list[tuple[int, int]]

    @property
    def equal(self) -> bool:
        return not self.missing_from_parametrization and not self.missing_from_oracle

    def failures(self) -> list[str]:
        msgs = [f"oracle solution {s.x} {s.y} {s.z} not produced by any (u, v)"
                for s in self.missing_from_parametrization]
        msgs += [f"parametrized solution {s.x} {s.y} {s.z} not found by the oracle"
                 for s in self.missing_from_oracle]
        return msgs


def completeness_report(z_max: int) -> CompletenessReport:
    sweep = _sweep(z_max)
    oracle = oracle_enumerate(z_max)
    a, b = set(sweep.solutions), set(oracle)
    return CompletenessReport(
        z_max=z_max,
        parametrized=sweep.solutions,
        oracle=oracle,
        missing_from_parametrization=sorted(b - a, key=QuinticSolution.sort_key),
        missing_from_oracle=sorted(a - b, key=QuinticSolution.sort_key),
        non_primitive_pairs=sweep.non_primitive,
    )


def qy_identity_defect(u: int, v: int) -> int:
    """5 (u^2 - v^2)^2 - q_y(u, v) - 4 v^4; identically zero."""
    return 5 * (u * u - v * v) ** 2 - quartic_y((u, v)) - 4 * v**4


__all__ = [
    "UVPair", "QuinticSolution", "quartic_x", "quartic_y", "parametrize",
    "enumerate_primitive", "oracle_enumerate", "completeness_report",
    "CompletenessReport", "qy_identity_defect",
]
