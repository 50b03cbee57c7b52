"""Lens spaces as reduced coefficient pairs.

A lens space is stored as a pair (p, q).  Raw pairs straight out of a surgery
formula may have p < 0 or q outside [0, p); `normalize` reduces them to a
canonical representative.  Two conventions are supported throughout:

* "oriented": L(p, q) ~ L(p, q') iff q' = q or q q' = 1 (mod p);
* "unoriented": additionally q' = -q or q q' = -1 (mod p).

The canonical representative is the minimum of the parameter orbit.  For a raw
pair with p < 0 we use L(-p, q) = -L(p, -q): under the oriented convention the
sign moves onto q, under the unoriented one it is dropped.

p = 1 encodes the 3-sphere and p = 0 the product S2 x S1; both are rendered by
name rather than as L(p, q).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InapplicableError, InvalidInputError

ORIENTED = "oriented"
UNORIENTED = "unoriented"
CONVENTIONS = (ORIENTED, UNORIENTED)


def check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise InvalidInputError(
            f"unknown convention {convention!r}; expected one of {CONVENTIONS}"
        )


@dataclass(frozen=True)
class RawLensParams:
    """Unreduced lens coefficients; p may be negative, q is only required coprime."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if math.gcd(self.p, self.q) != 1:
            raise InvalidInputError(f"lens parameters ({self.p}, {self.q}) are not coprime")

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class LensSpace:
    """Canonical lens coefficients: p >= 0 and q the minimum of its orbit."""

    p: int
    q: int

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if p < 0:
            raise InvalidInputError(f"canonical form needs p >= 0, got p = {p}")
        if p == 0 and q != 1:
            raise InvalidInputError("S2 x S1 is stored as (0, 1)")
        if p == 1 and q != 0:
            raise InvalidInputError("S3 is stored as (1, 0)")
        if p >= 2:
            if not 0 < q < p:
                raise InvalidInputError(f"need 0 < q < p, got ({p}, {q})")
            if math.gcd(p, q) != 1:
                raise InvalidInputError(f"lens parameters ({p}, {q}) are not coprime")

    def __str__(self) -> str:
        if self.p == 1:
            return "S3"
        if self.p == 0:
            return "S2xS1"
        return f"L({self.p},{self.q})"


def q_orbit(p: int, q: int, convention: str) -> set[int]:
    """All q' in [1, p) with L(p, q') equivalent to L(p, q).  Needs p >= 2."""
    check_convention(convention)
    if p < 2:
        raise InvalidInputError(f"parameter orbit needs p >= 2, got p = {p}")
    q %= p
    if math.gcd(p, q) != 1:
        raise InvalidInputError(f"lens parameters ({p}, {q}) are not coprime")
    orbit = {q, pow(q, -1, p)}
    if convention == UNORIENTED:
        orbit |= {p - r for r in orbit}
    return orbit


def normalize(raw: RawLensParams, convention: str = UNORIENTED) -> LensSpace:
    """Canonical representative of a raw pair under the given convention."""
    check_convention(convention)
    p, q = raw.p, raw.q
    if p < 0:
        p = -p
        if convention == ORIENTED:
            q = -q
    if p == 0:
        return LensSpace(0, 1)
    if p == 1:
        return LensSpace(1, 0)
    return LensSpace(p, min(q_orbit(p, q % p, convention)))


def is_homeomorphic(a: LensSpace, b: LensSpace, convention: str = UNORIENTED) -> bool:
    """Whether two canonical lens spaces are equivalent under the convention."""
    check_convention(convention)
    if a.p != b.p:
        return False
    if a.p <= 1:
        return True
    return b.q in q_orbit(a.p, a.q, convention)


def betti1(a: LensSpace) -> int:
    """First Betti number: 1 for S2 x S1, 0 for every other lens space."""
    return 1 if a.p == 0 else 0


def qr_obstructed(a: LensSpace) -> bool:
    """Whether neither q nor -q is a square mod p (full enumeration; needs p >= 2).

    When this holds, L(p, q) does not arise from integral surgery on a knot in
    S3, which obstructs hyperbolic surgical distance 1 from S3.
    """
    if a.p < 2:
        raise InapplicableError(f"quadratic-residue test needs p >= 2, got {a}")
    p = a.p
    squares = {(x * x) % p for x in range(p)}
    return a.q not in squares and (p - a.q) % p not in squares
