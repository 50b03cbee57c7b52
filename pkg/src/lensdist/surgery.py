"""Slope arithmetic, braid-closure surgery formulas, and named link families.

A braid closure in a solid torus, together with a filling slope r/s for which
the knot exterior fills to a solid torus, yields a two-component picture where
p/q surgery on the knot produces a lens space.  `braid_surgery_lens` evaluates
that lens space from the strand count n and the two slopes:

    K(p/q, r/s) = L(p r - (n^2 s) q, x q - y p)

with Bezout coefficients y (n^2 s) - x r = 1.  The solid-torus property of the
filling is an axiom carried by each registered family, with a citation; it is
never verified here.

Two sufficient criteria are included: Wu's hyperbolicity criterion (distance
at least 3 from a degeneracy slope) and the exponent-sum test for a braid on a
prime number of strands being pseudo-Anosov.  Both are one-sided: a negative
answer is "Inconclusive", never a disproof.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError
from .lens import RawLensParams

PSEUDO_ANOSOV = "PseudoAnosovByCriterion"
INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Slope:
    """Reduced fraction num/den with den >= 0; (1, 0) is the meridian."""

    num: int
    den: int

    def __post_init__(self) -> None:
        if self.den < 0:
            object.__setattr__(self, "num", -self.num)
            object.__setattr__(self, "den", -self.den)
        if math.gcd(self.num, self.den) != 1:
            raise InvalidInputError(
                f"slope {self.num}/{self.den} is not reduced: gcd != 1"
            )
        if self.den == 0 and self.num != 1:
            # gcd forces num = +-1 here; -1/0 is the same slope as 1/0
            object.__setattr__(self, "num", 1)

    def __str__(self) -> str:
        return f"{self.num}/{self.den}"


def parse_slope(text: str) -> Slope:
    """Parse "a/b" or a bare integer "a" (meaning a/1)."""
    body = text.strip()
    try:
        if "/" in body:
            num_text, den_text = body.split("/")
            num, den = int(num_text), int(den_text)
        else:
            num, den = int(body), 1
    except ValueError:
        raise InvalidInputError(f"cannot parse slope {text!r}; expected 'a/b' or 'a'") from None
    try:
        return Slope(num, den)
    except InvalidInputError as err:
        raise InvalidInputError(f"bad slope {text!r}: {err}") from None


def slope_distance(s1: Slope, s2: Slope) -> int:
    """Geometric intersection number |p v - q u| of p/q and u/v."""
    return abs(s1.num * s2.den - s1.den * s2.num)


def wu_hyperbolic_guarantee(surgery: Slope, degeneracy: Slope) -> bool:
    """Sufficient test: surgery at distance >= 3 from the degeneracy slope.

    False means "not guaranteed by this criterion", not "not hyperbolic".
    """
    if degeneracy.num <= 0:
        raise InvalidInputError(
            f"degeneracy slope must have positive numerator, got {degeneracy}"
        )
    return slope_distance(surgery, degeneracy) >= 3


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def pseudo_anosov_candidate(n: int, exponent_sum: int) -> str:
    """Exponent-sum test for a braid on n strands; sufficient only.

    Returns "PseudoAnosovByCriterion" when n is prime and the exponent sum is
    not a multiple of n - 1, else "Inconclusive".
    """
    if n < 3:
        raise InvalidInputError(f"criterion needs at least 3 strands, got {n}")
    if _is_prime(n) and exponent_sum % (n - 1) != 0:
        return PSEUDO_ANOSOV
    return INCONCLUSIVE


@dataclass(frozen=True)
class FillingCoefficients:
    """Bezout pair with y (n^2 s) - x r = 1, normalized to 0 <= y < |r|."""

    x: int
    y: int


def filling_coefficients(n: int, filling: Slope) -> FillingCoefficients:
    """Solve y (n^2 s) - x r = 1 for filling r/s, with 0 <= y < |r|.

    The representative is pinned so that the closed forms for the registered
    families come out with their published coefficients.
    """
    if n < 1:
        raise InvalidInputError(f"strand count must be positive, got {n}")
    big = n * n * filling.den
    r = filling.num
    if math.gcd(big, r) != 1:
        raise InvalidInputError(
            f"gcd({big}, {r}) != 1: no Bezout solution for n = {n}, filling {filling}"
        )
    if r == 0:
        # then big = +-1 and y big = 1 is forced
        return FillingCoefficients(0, big)
    m = abs(r)
    y = pow(big % m, -1, m) if m > 1 else 0
    x = (y * big - 1) // r
    assert y * big - x * r == 1
    return FillingCoefficients(x, y)


def braid_surgery_lens(n: int, surgery: Slope, filling: Slope) -> RawLensParams:
    """Lens parameters of p/q surgery on an n-strand braid-closure knot whose
    exterior fills to a solid torus along r/s.  Un-normalized output."""
    fc = filling_coefficients(n, filling)
    big = n * n * filling.den
    p, q = surgery.num, surgery.den
    return RawLensParams(p * filling.num - big * q, fc.x * q - fc.y * p)


# ---------------------------------------------------------------------------
# named families

@dataclass(frozen=True)
class BraidFamily:
    """A braid-closure family: strand count, filling slope, and the citation
    for the solid-torus axiom.  The braid word itself is not stored; only the
    exponent sum, as published, feeds the pseudo-Anosov test."""

    name: str
    n: int
    filling: Slope
    exponent_sum: int
    citations: tuple[str, ...]


@dataclass(frozen=True)
class ClosedFormFamily:
    """A family given directly by a closed form on integer surgery slopes:
    r/1 surgery yields L(a + b r, c + d r) with lens_coeffs = (a, b, c, d)."""

    name: str
    filling: Slope
    lens_coeffs: tuple[int, int, int, int]
    citations: tuple[str, ...]


BRAID_FAMILIES: dict[str, BraidFamily] = {
    "w3w7_fill18": BraidFamily("w3w7_fill18", 7, Slope(18, 1), 16, ("[B2]", "[BHW]")),
    "w3w7_fill19": BraidFamily("w3w7_fill19", 7, Slope(19, 1), 16, ("[B2]", "[BHW]")),
}

CLOSED_FORM_FAMILIES: dict[str, ClosedFormFamily] = {
    "yamada_k35_fill15": ClosedFormFamily(
        "yamada_k35_fill15", Slope(15, 1), (64, -15, 23, -5), ("[Yamada]",)
    ),
}


def family_names() -> tuple[str, ...]:
    return tuple(sorted(BRAID_FAMILIES) + sorted(CLOSED_FORM_FAMILIES))


def family_info(name: str) -> BraidFamily | ClosedFormFamily:
    fam = BRAID_FAMILIES.get(name) or CLOSED_FORM_FAMILIES.get(name)
    if fam is None:
        raise InvalidInputError(
            f"unknown family {name!r}; known: {', '.join(family_names())}"
        )
    return fam


def family_eval(name: str, surgery: Slope) -> RawLensParams:
    """Evaluate a registered family at a surgery slope; un-normalized output."""
    fam = family_info(name)
    if isinstance(fam, BraidFamily):
        return braid_surgery_lens(fam.n, surgery, fam.filling)
    if surgery.den != 1:
        raise InvalidInputError(
            f"family {name!r} is only defined on integer slopes r/1, got {surgery}"
        )
    a, b, c, d = fam.lens_coeffs
    r = surgery.num
    return RawLensParams(a + b * r, c + d * r)
