"""Invariants of (1,1)-knots in lens spaces.

A knot is specified by integers (p, q, u) with p >= 2, gcd(p, q) = 1 and
0 < u < p: the knot k(p, q; u) in L(p, q) whose lift meets u of the p arcs of
the standard genus-one splitting.  Everything here is derived from the basic
sequence s_j = j q mod p, j = 1..p:

* psi is the index with s_psi = u, i.e. psi = u q^(-1) mod p taken in [1, p);
* phi counts j < psi with s_j < u;
* phi_tilde is the minimum of phi and its three reflections, an invariant of
  the unoriented knot; its value separates torus knots (0), toroidal knots (1)
  and hyperbolic knots (>= 2).

The geometric classification is only claimed when some longitudinal surgery on
the knot can give S3, i.e. when |psi u - (phi + r) p| = 1 has an integer
solution r; otherwise the classification reports "HypothesisUnverified".
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .errors import InvalidInputError

TORUS_KNOT = "TorusKnot"
TOROIDAL = "Toroidal"
HYPERBOLIC = "Hyperbolic"
HYPOTHESIS_UNVERIFIED = "HypothesisUnverified"


def _check_pq(p: int, q: int) -> None:
    if p < 2:
        raise InvalidInputError(f"basic sequence needs p >= 2, got p = {p}")
    if math.gcd(p, q) != 1:
        raise InvalidInputError(f"parameters ({p}, {q}) are not coprime")


def _check_spec(p: int, q: int, u: int) -> None:
    _check_pq(p, q)
    if not 0 < u < p:
        raise InvalidInputError(f"need 0 < u < p, got u = {u} with p = {p}")


@dataclass(frozen=True)
class OneBridgeKnotSpec:
    """Parameters (p, q, u) of a (1,1)-knot; validated on construction."""

    p: int
    q: int
    u: int

    def __post_init__(self) -> None:
        _check_spec(self.p, self.q, self.u)

    def __str__(self) -> str:
        return f"k({self.p},{self.q};{self.u})"


@dataclass(frozen=True)
class BasicSequence:
    """The residues j q mod p for j = 1..p; values[j - 1] = s_j."""

    p: int
    q: int
    values: tuple[int, ...]


@dataclass(frozen=True)
class KnotInvariants:
    psi: int
    phi: int
    phi_tilde: int
    phi_tilde_parts: tuple[int, int, int, int]
    s3_candidates: tuple[int, ...]
    classification: str


@lru_cache(maxsize=4096)
def _basic_values(p: int, q: int) -> tuple[int, ...]:
    q %= p
    out = []
    s = 0
    for _ in range(p):
        s = (s + q) % p
        out.append(s)
    return tuple(out)


def basic_sequence(p: int, q: int) -> BasicSequence:
    _check_pq(p, q)
    return BasicSequence(p, q, _basic_values(p, q))


def psi(p: int, q: int, u: int) -> int:
    """The unique index in [1, p) with psi * q = u (mod p)."""
    _check_spec(p, q, u)
    return (u * pow(q, -1, p)) % p


def phi(p: int, q: int, u: int) -> int:
    """Number of indices j < psi(p, q, u) with s_j < u."""
    _check_spec(p, q, u)
    values = _basic_values(p, q)
    bound = psi(p, q, u)
    return sum(1 for j in range(1, bound) if values[j - 1] < u)


def phi_tilde_parts(p: int, q: int, u: int) -> tuple[int, int, int, int]:
    """phi together with its three symmetry images, in a fixed order."""
    f = phi(p, q, u)
    s = psi(p, q, u)
    return (f, f - s + p - u, s - f - 1, u - f - 1)


def phi_tilde(p: int, q: int, u: int) -> int:
    """min of phi_tilde_parts; 0 for torus knots, 1 toroidal, >= 2 hyperbolic."""
    return min(phi_tilde_parts(p, q, u))


def s3_longitudinal_candidates(p: int, q: int, u: int) -> tuple[int, ...]:
    """Integers r with |psi u - (phi + r) p| = 1, in increasing order.

    These are the longitudinal surgery coefficients under which the knot could
    yield S3 (the homology condition |H1| = 1).  The set has at most two
    elements, and two only when p divides both psi*u - 1 and psi*u + 1, which
    forces p = 2.
    """
    s = psi(p, q, u)
    f = phi(p, q, u)
    out = []
    for target in (s * u - 1, s * u + 1):
        if target % p == 0:
            out.append(target // p - f)
    return tuple(sorted(out))


def classify(p: int, q: int, u: int) -> KnotInvariants:
    """All numeric invariants plus the geometric type of k(p, q; u)."""
    _check_spec(p, q, u)
    s = psi(p, q, u)
    f = phi(p, q, u)
    parts = phi_tilde_parts(p, q, u)
    tilde = min(parts)
    candidates = s3_longitudinal_candidates(p, q, u)
    if not candidates:
        kind = HYPOTHESIS_UNVERIFIED
    elif tilde == 0:
        kind = TORUS_KNOT
    elif tilde == 1:
        kind = TOROIDAL
    else:
        kind = HYPERBOLIC
    return KnotInvariants(s, f, tilde, parts, candidates, kind)
