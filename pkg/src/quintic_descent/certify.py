"""Residue certificates for the modular steps of the descent.

Each ``certify_*`` function enumerates a finite, complete set of residue
classes and records which tuples satisfy the congruence under test.  UNSAT
means the branch is impossible; for the constraint branches the surviving
witnesses pin down a congruence that feeds an external theorem.

Exponents that range over infinitely many values (alpha >= 1, k >= 0, odd
n >= 7, ...) are reduced with ``exponent_representatives``: the vector of
residues b_i^(s_i e + c_i) mod m is a deterministic function of its value at
e - 1, so once a state repeats every later exponent repeats an earlier one.
"""

from __future__ import annotations

import itertools
import json
import math
import random
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .descent import quartic_y


class Branch(str, Enum):
    N5_BETA0_MOD8 = "N5_BETA0_MOD8"
    N5_BETAPOS_MOD3 = "N5_BETAPOS_MOD3"
    N5_QUOTIENT_MOD25 = "N5_QUOTIENT_MOD25"
    LEMMA2_MOD5 = "LEMMA2_MOD5"
    LEMMA2_QUARTIC5 = "LEMMA2_QUARTIC5"
    EQ4_SEARCH = "EQ4_SEARCH"
    U5_MOD8 = "U5_MOD8"
    NOT5U_N7_MOD3 = "NOT5U_N7_MOD3"
    NOT5U_N7_MOD8 = "NOT5U_N7_MOD8"


class ProofStepError(AssertionError):
    """A step of the descent failed on concrete input."""


@dataclass(frozen=True)
class ResidueCertificate:
    branch_id: Branch
    modulus: int
    enumerated: int
    satisfiable: bool
    witnesses: tuple[tuple[int, ...], ...]
    derived_constraint: Optional[str] = None

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")
        if self.satisfiable != bool(self.witnesses):
            raise ValueError("satisfiable must be true exactly when there are witnesses")

    def to_line(self) -> str:
        record = {
            "branch_id": self.branch_id.value,
            "modulus": self.modulus,
            "enumerated": self.enumerated,
            "satisfiable": self.satisfiable,
            "witnesses": [list(w) for w in self.witnesses],
            "derived_constraint": self.derived_constraint,
        }
        return json.dumps(record, ensure_ascii=False, separators=(", ", ": "))

    @classmethod
    def from_line(cls, line: str) -> "ResidueCertificate":
        d = json.loads(line)
        return cls(
            Branch(d["branch_id"]), d["modulus"], d["enumerated"], d["satisfiable"],
            tuple(tuple(w) for w in d["witnesses"]), d["derived_constraint"],
        )


# ---------------------------------------------------------------- evaluator

def _pw(b: int, e: int, m: int) -> int:
    if e < 0:
        raise ValueError(f"negative exponent {e}")
    return pow(b, e, m)


class Poly(str, Enum):
    EQ7_LHS = "EQ7_LHS"          # 5^(2 beta) p^(2 gamma)
    EQ7_RHS = "EQ7_RHS"          # ((x^2 + 2^(2 alpha) 5^j)^5 - x^10) / 2^(2 alpha), expanded
    N5_QUOTIENT = "N5_QUOTIENT"  # z^4 + z^3 x^2 + z^2 x^4 + z x^6 + x^8
    QUARTIC_X = "QUARTIC_X"      # u^4 - 10 u^2 v^2 + 5 v^4
    QUARTIC_Y = "QUARTIC_Y"      # v^4 - 10 u^2 v^2 + 5 u^4
    EQ3_LHS = "EQ3_LHS"          # 5^k p^ell - 2^(4 alpha) 5^kp p^ellp
    EQ4_LHS = "EQ4_LHS"          # 3^(4 gamma) - 2^(4 alpha) 5^(4 beta - 5)
    EQ13_RHS = "EQ13_RHS"        # 5 B^n
    EQ16_LHS = "EQ16_LHS"        # B^n + 2^(4 alpha + 2) 5^(4 k + 1)
    W_SQUARED = "W_SQUARED"      # (u^2 - 5 v^2)^2


def _eq7_rhs(a, m):
    x, j, al = a["x"], a["j"], a["alpha"]
    return (5 ** (j + 1) % m * _pw(x, 8, m)
            + _pw(2, 2 * al + 1, m) * _pw(5, 2 * j + 1, m) * _pw(x, 6, m)
            + _pw(2, 4 * al + 1, m) * _pw(5, 3 * j + 1, m) * _pw(x, 4, m)
            + _pw(2, 6 * al, m) * _pw(5, 4 * j + 1, m) * _pw(x, 2, m)
            + _pw(2, 8 * al, m) * _pw(5, 5 * j, m))


_POLYS: dict[Poly, tuple[tuple[str, ...], Callable[[Mapping[str, int], int], int]]] = {
    Poly.EQ7_LHS: (("beta", "p", "gamma"),
                   lambda a, m: _pw(5, 2 * a["beta"], m) * _pw(a["p"], 2 * a["gamma"], m)),
    Poly.EQ7_RHS: (("x", "j", "alpha"), _eq7_rhs),
    Poly.N5_QUOTIENT: (("x", "z"),
                       lambda a, m: sum(_pw(a["z"], 4 - i, m) * _pw(a["x"], 2 * i, m) for i in range(5))),
    Poly.QUARTIC_X: (("u", "v"),
                     lambda a, m: _pw(a["u"], 4, m) - 10 * _pw(a["u"] * a["v"], 2, m) + 5 * _pw(a["v"], 4, m)),
    Poly.QUARTIC_Y: (("u", "v"),
                     lambda a, m: _pw(a["v"], 4, m) - 10 * _pw(a["u"] * a["v"], 2, m) + 5 * _pw(a["u"], 4, m)),
    Poly.EQ3_LHS: (("k", "ell", "alpha", "kp", "ellp", "p"),
                   lambda a, m: _pw(5, a["k"], m) * _pw(a["p"], a["ell"], m)
                   - _pw(2, 4 * a["alpha"], m) * _pw(5, a["kp"], m) * _pw(a["p"], a["ellp"], m)),
    Poly.EQ4_LHS: (("alpha", "beta", "gamma"),
                   lambda a, m: _pw(3, 4 * a["gamma"], m)
                   - _pw(2, 4 * a["alpha"], m) * _pw(5, 4 * a["beta"] - 5, m)),
    Poly.EQ13_RHS: (("B", "n"), lambda a, m: 5 * _pw(a["B"], a["n"], m)),
    Poly.EQ16_LHS: (("B", "n", "alpha", "k"),
                    lambda a, m: _pw(a["B"], a["n"], m)
                    + _pw(2, 4 * a["alpha"] + 2, m) * _pw(5, 4 * a["k"] + 1, m)),
    Poly.W_SQUARED: (("u", "v"), lambda a, m: _pw(a["u"] * a["u"] - 5 * a["v"] * a["v"], 2, m)),
}


def residue_reduce(poly_id: Poly | str, modulus: int, assignments: Mapping[str, int]) -> int:
    """Residue of one of the fixed expressions at an integer assignment."""
    if modulus < 1:
        raise ValueError("modulus must be positive")
    symbols, fn = _POLYS[Poly(poly_id)]
    missing = [s for s in symbols if s not in assignments]
    if missing:
        raise ValueError(f"{Poly(poly_id).value}: missing assignment for {', '.join(missing)}")
    return fn(assignments, modulus) % modulus


def exponent_representatives(terms: Iterable[tuple[int, int, int]], modulus: int,
                             start: int = 0) -> list[int]:
    """Exponents e >= start covering every residue pattern of the given terms.

    ``terms`` are (base, step, offset) triples standing for base^(step*e + offset).
    """
    terms = list(terms)
    seen = set()
    reps = []
    e = start
    while True:
        state = tuple(_pw(b, s * e + c, modulus) for b, s, c in terms)
        if state in seen:
            return reps
        seen.add(state)
        reps.append(e)
        e += 1


def power_stabilizes(base: int, modulus: int) -> bool:
    """base^e mod modulus is constant for all e >= log2(modulus) (checked to one full cycle)."""
    e0 = max(1, math.ceil(math.log2(modulus)))
    return len(exponent_representatives([(base, 1, 0)], modulus, e0)) == 1


def enumerate_residues(ranges: Mapping[str, Sequence], predicate: Callable[[dict], bool],
                       order: Optional[Sequence[str]] = None) -> tuple[int, list[tuple]]:
    """Scan the full cartesian product of ``ranges``.

    Returns (count, witnesses); witness tuples follow the key order of
    ``ranges`` regardless of the iteration ``order``, and are sorted.
    """
    names = list(ranges)
    order = list(order) if order is not None else names
    if sorted(order) != sorted(names):
        raise ValueError("order must be a permutation of the range names")
    count = 0
    witnesses = []
    for combo in itertools.product(*(ranges[n] for n in order)):
        a = dict(zip(order, combo))
        count += 1
        if predicate(a):
            witnesses.append(tuple(_flatten(a[n] for n in names)))
    return count, sorted(witnesses)


def _flatten(values):
    for v in values:
        if isinstance(v, tuple):
            yield from v
        else:
            yield v


def _single(values: set, what: str, m: int) -> str:
    if len(values) == 1:
        return f"{what} ≡ {next(iter(values))} (mod {m})"
    return f"{what} mod {m} ∈ {{{', '.join(map(str, sorted(values)))}}}"


def _shuffled(ranges, seed):
    if seed is None:
        return None
    order = list(ranges)
    random.Random(seed).shuffle(order)
    return order


# ------------------------------------------------------- n = 5 branches

def _odd_prime_residues(m: int) -> list[int]:
    """Residues mod m attained by odd primes other than 5 (Dirichlet for the units)."""
    out = {r for r in range(m) if math.gcd(r, m) == 1}
    out |= {q % m for q in (3, 7, 11, 13) if m % q == 0}
    return sorted(out)


def certify_n5_beta0_mod8(seed: Optional[int] = None) -> ResidueCertificate:
    """beta = 0 forces j = 0; the expanded quintic then reads 1 = 5 mod 8."""
    m = 8
    odd = [1, 3, 5, 7]
    ps = _odd_prime_residues(m)
    ranges = {
        "x": odd,
        "alpha": exponent_representatives([(2, 2, 1), (2, 4, 1), (2, 6, 0), (2, 8, 0)], m, start=1),
        "p": ps,
        "gamma": exponent_representatives([(p, 2, 0) for p in ps], m, start=0),
    }
    lhs_vals, rhs_vals = set(), set()

    def holds(a):
        lhs = residue_reduce(Poly.EQ7_LHS, m, {"beta": 0, **a})
        rhs = residue_reduce(Poly.EQ7_RHS, m, {"j": 0, **a})
        lhs_vals.add(lhs)
        rhs_vals.add(rhs)
        return lhs == rhs

    n, wit = enumerate_residues(ranges, holds, _shuffled(ranges, seed))
    constraint = None
    if len(lhs_vals) == 1 and len(rhs_vals) == 1:
        constraint = f"LHS ≡ {lhs_vals.pop()}, RHS ≡ {rhs_vals.pop()} (mod {m}) for all odd x"
    return ResidueCertificate(Branch.N5_BETA0_MOD8, m, n, bool(wit), tuple(wit), constraint)


def certify_n5_betapos_mod3(seed: Optional[int] = None) -> ResidueCertificate:
    """beta >= 1 forces j = 2 beta - 1; mod 3 the quintic demands p^(2 gamma) = 2."""
    m = 3
    ps = _odd_prime_residues(m)
    # j = 2 beta - 1: 5-powers in the expansion are 5^(2b), 5^(4b-1), 5^(6b-2), 5^(8b-3), 5^(10b-5)
    beta_terms = [(5, 2, 0), (5, 4, -1), (5, 6, -2), (5, 8, -3), (5, 10, -5)]
    ranges = {
        "x": [0, 1, 2],
        "alpha": exponent_representatives([(2, 2, 1), (2, 4, 1), (2, 6, 0), (2, 8, 0)], m, start=1),
        "beta": exponent_representatives(beta_terms, m, start=1),
        "p": ps,
        "gamma": exponent_representatives([(p, 2, 0) for p in ps], m, start=0),
    }
    needed, attainable = set(), set()

    def holds(a):
        lhs = residue_reduce(Poly.EQ7_LHS, m, a)
        rhs = residue_reduce(Poly.EQ7_RHS, m, {"j": 2 * a["beta"] - 1, **a})
        inv = pow(_pw(5, 2 * a["beta"], m), -1, m)
        needed.add(rhs * inv % m)
        attainable.add(_pw(a["p"], 2 * a["gamma"], m))
        return lhs == rhs

    n, wit = enumerate_residues(ranges, holds, _shuffled(ranges, seed))
    constraint = None
    if not needed & attainable:
        constraint = _single(needed, "p^{2γ}", m) + " is impossible"
    return ResidueCertificate(Branch.N5_BETAPOS_MOD3, m, n, bool(wit), tuple(wit), constraint)


def certify_n5_quotient_mod25(seed: Optional[int] = None) -> ResidueCertificate:
    """5 | z - x^2 with 5 not dividing x forces z^4 + z^3 x^2 + ... + x^8 = 5 mod 25."""
    m = 25
    ranges = {"x": [r for r in range(m) if r % 5], "t": list(range(5))}
    values = set()

    def fails(a):
        z = (a["x"] ** 2 + 5 * a["t"]) % m
        val = residue_reduce(Poly.N5_QUOTIENT, m, {"x": a["x"], "z": z})
        values.add(val)
        return val != 5

    n, wit = enumerate_residues(ranges, fails, _shuffled(ranges, seed))
    constraint = _single(values, "z^4 + z^3x^2 + z^2x^4 + zx^6 + x^8", m)
    return ResidueCertificate(Branch.N5_QUOTIENT_MOD25, m, n, bool(wit), tuple(wit), constraint)


def n5_gcd_classify(x: int, z: int) -> int:
    """gcd(z - x^2, z^4 + z^3 x^2 + z^2 x^4 + z x^6 + x^8), checked to be 5 iff 5 | z - x^2, else 1."""
    if math.gcd(x, z) != 1 or x % 2 == 0 or z % 2 == 0:
        raise ValueError("need gcd(x, z) = 1 with x and z odd")
    d = z - x * x
    if d == 0:
        raise ValueError("z = x^2 is excluded (z > 1 in the n = 5 case)")
    quotient = sum(z ** (4 - i) * x ** (2 * i) for i in range(5))
    g = math.gcd(d, quotient)
    if g not in (1, 5) or (g == 5) != (d % 5 == 0):
        raise ProofStepError(f"gcd classification fails at x={x}, z={z}: g={g}")
    return g


# ------------------------------------------ v^4 - 10u^2v^2 + 5u^4 = 5

def certify_lemma2_mod5(seed: Optional[int] = None) -> ResidueCertificate:
    """The k >= 1 branch of 5^k p^l - 2^(4a) 5^k' p^l' = 1 is impossible mod 5.

    Here k = 4 beta - 5 (beta >= 2), k' = 0 and {l, l'} = {0, 4 gamma};
    ``swap`` = 0 puts 4 gamma on p^l, 1 on p^l'.
    """
    m = 5
    ps = [1, 2, 3, 4]
    ranges = {
        "alpha": exponent_representatives([(2, 4, 0)], m, start=1),
        "beta": exponent_representatives([(5, 4, -5)], m, start=2),
        "p": ps,
        "gamma": exponent_representatives([(p, 4, 0) for p in ps], m, start=0),
        "swap": [0, 1],
    }

    def holds(a):
        ell, ellp = (4 * a["gamma"], 0) if a["swap"] == 0 else (0, 4 * a["gamma"])
        lhs = residue_reduce(Poly.EQ3_LHS, m, {"k": 4 * a["beta"] - 5, "kp": 0, "ell": ell,
                                                "ellp": ellp, "alpha": a["alpha"], "p": a["p"]})
        return lhs == 1

    n, wit = enumerate_residues(ranges, holds, _shuffled(ranges, seed))
    return ResidueCertificate(Branch.LEMMA2_MOD5, m, n, bool(wit), tuple(wit),
                              None if wit else "k = 0")


def certify_lemma2_quartic5(bound: int = 200) -> ResidueCertificate:
    """Search coprime (u odd, v even nonzero), |u|, |v| <= bound, for v^4 - 10u^2v^2 + 5u^4 = 5.

    A mod-5 sieve (the quartic is v^4 mod 5) runs first; survivors are checked exactly.
    """
    if bound < 1:
        raise ValueError("bound must be >= 1")
    m = 5
    us = [u for u in range(-bound, bound + 1) if u % 2]
    vs = [v for v in range(-bound, bound + 1) if v % 2 == 0 and v]
    wit = []
    for u in us:
        for v in vs:
            if residue_reduce(Poly.QUARTIC_Y, m, {"u": u, "v": v}) != 5 % m:
                continue
            if math.gcd(u, v) == 1 and quartic_y((u, v)) == 5:
                wit.append((u, v))
    return ResidueCertificate(Branch.LEMMA2_QUARTIC5, m, len(us) * len(vs), bool(wit), tuple(sorted(wit)))


def certify_eq4_search(max_alpha: int = 3, max_beta: int = 3, max_gamma: int = 3) -> ResidueCertificate:
    """Exhaustive search of 3^(4g) - 2^(4a) 5^(4b-5) = 1 over 1 <= a, 2 <= b, 1 <= g within the box."""
    if min(max_alpha, max_beta, max_gamma) < 1:
        raise ValueError("bounds must be >= 1")
    m = 16
    box = itertools.product(range(1, max_alpha + 1), range(2, max_beta + 1), range(1, max_gamma + 1))
    count = 0
    wit = []
    for al, be, ga in box:
        count += 1
        a = {"alpha": al, "beta": be, "gamma": ga}
        if residue_reduce(Poly.EQ4_LHS, m, a) != 1:
            continue
        if 3 ** (4 * ga) - 2 ** (4 * al) * 5 ** (4 * be - 5) == 1:
            wit.append((al, be, ga))
    return ResidueCertificate(Branch.EQ4_SEARCH, m, count, bool(wit), tuple(wit))


# ------------------------------------------------------------ descent

@dataclass(frozen=True)
class DescentCase:
    five_divides_v: bool
    k: int
    expected_v_form: str
    expected_quartic_form: str


def descent_split(u: int, v: int, beta: int) -> DescentCase:
    """Classify (u, v) by whether 5 | v, after checking gcd(v, q_y(u, v)) = gcd(v, 5)."""
    if math.gcd(u, v) != 1 or u % 2 == 0 or v % 2:
        raise ValueError("need coprime u odd, v even")
    g = math.gcd(v, quartic_y((u, v)))
    if g != math.gcd(v, 5):
        raise ProofStepError(f"gcd(v, q_y) = {g} differs from gcd(v, 5) at u={u}, v={v}")
    five = g == 5
    if five and beta < 1:
        raise ValueError("5 | v requires beta >= 1")
    k = beta - 1 if five else 0
    return DescentCase(five, k, f"±2^α·5^{k}", f"±5^{beta - k}·p^γ")


# the exponent n is an odd prime >= 7; odd n >= 7 (n = 2i + 7) is a superset
def _odd_n_reps(bases, m):
    return [2 * i + 7 for i in exponent_representatives([(b, 2, 7) for b in bases], m, start=0)]


def certify_u5_mod8(seed: Optional[int] = None) -> ResidueCertificate:
    """5 | u: u^4 - 10u^2v^2 + 5v^4 = 5 B^n with u odd, v even forces B^n = 5 mod 8."""
    m = 8
    bs = list(range(m))
    ranges = {"u": [1, 3, 5, 7], "v": [0, 2, 4, 6], "B": bs, "n": _odd_n_reps(bs, m)}

    def holds(a):
        return residue_reduce(Poly.QUARTIC_X, m, a) == residue_reduce(Poly.EQ13_RHS, m, a)

    n, wit = enumerate_residues(ranges, holds, _shuffled(ranges, seed))
    powers = {_pw(b, e, m) for _, _, b, e in wit}
    return ResidueCertificate(Branch.U5_MOD8, m, n, bool(wit), tuple(wit), _single(powers, "B₁ⁿ", m))


def _n7_certificate(branch, m, uv, seed):
    bs = list(range(m))
    ranges = {
        "uv": uv,
        "B": bs,
        "alpha": exponent_representatives([(2, 4, 2)], m, start=1),
        "k": exponent_representatives([(5, 4, 1)], m, start=0),
    }

    def holds(a):
        u, v = a["uv"]
        lhs = residue_reduce(Poly.EQ16_LHS, m, {"n": 7, **a})
        return lhs == residue_reduce(Poly.W_SQUARED, m, {"u": u, "v": v})

    n, wit = enumerate_residues(ranges, holds, _shuffled(ranges, seed))
    return ResidueCertificate(branch, m, n, bool(wit), tuple(wit), _single({w[2] for w in wit}, "B₂", m))


def certify_n7_mod3(seed: Optional[int] = None) -> ResidueCertificate:
    """n = 7, 5 not dividing u: B^7 + 2^(4a+2) 5^(4k+1) = (u^2 - 5v^2)^2 mod 3.

    (u, v) runs over the eight residue pairs that are not both 0, which is
    where coprimality enters (it keeps 3 from dividing w).
    """
    uv = [(u, v) for u in range(3) for v in range(3) if (u, v) != (0, 0)]
    return _n7_certificate(Branch.NOT5U_N7_MOD3, 3, uv, seed)


def certify_n7_mod8(seed: Optional[int] = None) -> ResidueCertificate:
    uv = [(u, v) for u in (1, 3, 5, 7) for v in (0, 2, 4, 6)]
    return _n7_certificate(Branch.NOT5U_N7_MOD8, 8, uv, seed)


def certify_n7_congruences(seed: Optional[int] = None) -> tuple[ResidueCertificate, ResidueCertificate]:
    return certify_n7_mod3(seed), certify_n7_mod8(seed)


def n7_joint_constraint(mod3: ResidueCertificate, mod8: ResidueCertificate) -> Optional[str]:
    """Combine the B_2 residues mod 3 and mod 8 by CRT; report when +-1 is ruled out."""
    b3 = {w[2] for w in mod3.witnesses}
    b8 = {w[2] for w in mod8.witnesses}
    allowed = {b for b in range(24) if b % 3 in b3 and b % 8 in b8}
    if allowed and not allowed & {1, 23}:
        return "B₂ ∉ {−1, +1}"
    return None


# ----------------------------------------------------- suite and axioms

# branch -> (expected satisfiable, expected derived_constraint)
EXPECTED: dict[Branch, tuple[bool, Optional[str]]] = {
    Branch.N5_BETA0_MOD8: (False, "LHS ≡ 1, RHS ≡ 5 (mod 8) for all odd x"),
    Branch.N5_BETAPOS_MOD3: (False, "p^{2γ} ≡ 2 (mod 3) is impossible"),
    Branch.N5_QUOTIENT_MOD25: (False, "z^4 + z^3x^2 + z^2x^4 + zx^6 + x^8 ≡ 5 (mod 25)"),
    Branch.LEMMA2_MOD5: (False, "k = 0"),
    Branch.LEMMA2_QUARTIC5: (False, None),
    Branch.EQ4_SEARCH: (False, None),
    Branch.U5_MOD8: (True, "B₁ⁿ ≡ 5 (mod 8)"),
    Branch.NOT5U_N7_MOD3: (True, "B₂ ≡ 2 (mod 3)"),
    Branch.NOT5U_N7_MOD8: (True, "B₂ ≡ 1 (mod 8)"),
}


def run_branch(branch: Branch | str, bound: int = 200,
               eq4_box: tuple[int, int, int] = (3, 3, 3)) -> ResidueCertificate:
    branch = Branch(branch)
    if branch is Branch.LEMMA2_QUARTIC5:
        return certify_lemma2_quartic5(bound)
    if branch is Branch.EQ4_SEARCH:
        return certify_eq4_search(*eq4_box)
    return {
        Branch.N5_BETA0_MOD8: certify_n5_beta0_mod8,
        Branch.N5_BETAPOS_MOD3: certify_n5_betapos_mod3,
        Branch.N5_QUOTIENT_MOD25: certify_n5_quotient_mod25,
        Branch.LEMMA2_MOD5: certify_lemma2_mod5,
        Branch.U5_MOD8: certify_u5_mod8,
        Branch.NOT5U_N7_MOD3: certify_n7_mod3,
        Branch.NOT5U_N7_MOD8: certify_n7_mod8,
    }[branch]()


def run_all(bound: int = 200, eq4_box: tuple[int, int, int] = (3, 3, 3)) -> list[ResidueCertificate]:
    return [run_branch(b, bound, eq4_box) for b in Branch]


def check_certificate(cert: ResidueCertificate) -> list[str]:
    """Mismatches between a certificate and the outcome the descent needs."""
    sat, constraint = EXPECTED[cert.branch_id]
    problems = []
    if cert.satisfiable != sat:
        problems.append(f"{cert.branch_id.value}: expected {'SAT' if sat else 'UNSAT'}")
    if cert.derived_constraint != constraint:
        problems.append(f"{cert.branch_id.value}: derived {cert.derived_constraint!r}, expected {constraint!r}")
    return problems


@dataclass(frozen=True)
class AxiomRecord:
    """An external theorem used as a trusted step, with the hypotheses it needs."""

    axiom: str
    statement: str
    hypotheses: tuple[str, ...]
    discharged_by: tuple[str, ...]

    def to_line(self) -> str:
        record = {"axiom": self.axiom, "statement": self.statement,
                  "hypotheses": list(self.hypotheses), "discharged_by": list(self.discharged_by)}
        return json.dumps(record, ensure_ascii=False, separators=(", ", ": "))


AXIOMS = (
    AxiomRecord("Bruin 2003, Theorem 1.1", "no coprime solutions for N = 2", (), ()),
    AxiomRecord("Bennett-Chen 2012, Theorem 1", "no coprime solutions for N = 3", (), ()),
    AxiomRecord("Luca-Togbe 2008, Theorem 1.1",
                "X^2 + 2^a 5^b = Y^N has no coprime solution with 4 | N, a > 0, b >= 3",
                ("3^{4γ} − 2^{4α}5^{4β−5} = 1 with β ≥ 2, γ ≥ 1",),
                (Branch.LEMMA2_MOD5.value, Branch.EQ4_SEARCH.value)),
    AxiomRecord("Bennett-Skinner 2004, Theorem 1.2",
                "X^n + 2^{4α+2} Y^n = 5 Z^2 has no admissible solution",
                ("B₁ odd", "B₁ ≠ ±1", "n odd prime ≥ 7"),
                (Branch.U5_MOD8.value,)),
    AxiomRecord("Bennett-Skinner 2004, Theorem 1.5",
                "X^n + 2^{4α+2} 5^{4k+1} Y^n = Z^2 has no admissible solution for prime n ≥ 11",
                ("gcd(B₂, w₂) = 1", "2 ∤ B₂, 5 ∤ B₂"), ()),
    AxiomRecord("Bennett-Skinner level lemma, n = 7",
                "x^7 + C y^7 = z^2 gives a weight-2 newform of level N₇",
                ("xy ≠ ±1", "z ≡ 1 (mod 4)", "v₂(Cy⁷) ≥ 6", "v_q(C) < 7 for all q"),
                (Branch.NOT5U_N7_MOD3.value, Branch.NOT5U_N7_MOD8.value)),
)


def suite_lines(certs: Sequence[ResidueCertificate]) -> list[str]:
    return [c.to_line() for c in certs] + [a.to_line() for a in AXIOMS]
