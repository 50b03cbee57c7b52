"""Surgical-distance bounds between lens spaces.

Any two lens spaces are related by a single Dehn surgery, so the plain
surgical distance d is 0 or 1.  For the hyperbolic variant d_H (surgeries
along hyperbolic knots only), d = 1 gives d_H <= 2, and the value 1 vs 2 is
decided here only as far as the literature allows:

* obstructions pin d_H = 2 for S3 against S2 x S1, against L(p, q) with
  2 <= p < 9, and against L(p, q) failing the quadratic-residue test;
* witness families certify candidate d_H = 1 pairs, graded "Asserted"
  because the underlying hyperbolicity claim holds only for parameters above
  an ineffective constant ("CriterionVerified" needs a degeneracy slope that
  passes the distance >= 3 test);
* everything else is reported Undetermined with the honest bounds [1, 2].

Citation strings on evidence records are stable identifiers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import InvalidInputError
from .lens import (
    UNORIENTED,
    LensSpace,
    RawLensParams,
    betti1,
    check_convention,
    is_homeomorphic,
    normalize,
    qr_obstructed,
)
from .surgery import Slope, wu_hyperbolic_guarantee

EQUAL = "Equal"
EXACTLY_TWO = "ExactlyTwo"
ONE_ASSERTED = "OneAsserted"
UNDETERMINED = "Undetermined"

ASSERTED = "Asserted"
CRITERION_VERIFIED = "CriterionVerified"

# stable citation identifiers (external interface)
CITE_QR = "FS-qr"
CITE_SMALL_P = "KMOS-p<9"
CITE_S2XS1 = "Gabai-S2xS1"
CITE_UPPER = "Kawauchi-upper"
CITE_SINGLE_FAMILY = "Thm4.3-family"
CITE_PAIR_FAMILY = "Thm4.4-pair"


EVIDENCE_KINDS = ("upper-bound", "obstruction", "witness")


@dataclass(frozen=True)
class Evidence:
    kind: str
    citation: str
    detail: str

    def __post_init__(self) -> None:
        if self.kind not in EVIDENCE_KINDS:
            raise InvalidInputError(f"unknown evidence kind {self.kind!r}")


@dataclass(frozen=True)
class DistanceReport:
    d_value: int
    dh_lower: int
    dh_upper: int
    status: str
    evidence: tuple[Evidence, ...]
    convention: str

    def __post_init__(self) -> None:
        ok = (
            self.d_value in (0, 1)
            and 0 <= self.dh_lower <= self.dh_upper <= 2
            and self.d_value <= self.dh_lower
            and (self.status == EQUAL) == (self.d_value == 0)
            and (self.d_value == 0) == (self.dh_upper == 0)
            and (self.status != EXACTLY_TWO or self.dh_lower == self.dh_upper == 2)
        )
        if not ok:
            raise InvalidInputError(f"inconsistent distance report: {self}")


@dataclass(frozen=True)
class WitnessPair:
    """A d = 1 pair produced by a witness family, with its parameters."""

    source: RawLensParams
    target: RawLensParams
    parameters: tuple[int, int]  # (p, q')
    grade: str


# -----------------------------------------------------------------------------
# elementary bounds


def d_lens(a: LensSpace, b: LensSpace, convention: str = UNORIENTED) -> int:
    """Plain surgical distance inside the lens-space family: 0 or 1."""
    return 0 if is_homeomorphic(a, b, convention) else 1


def betti_lower_bound(a: LensSpace, b: LensSpace) -> int:
    """|beta_1(a) - beta_1(b)|, a lower bound for any surgery distance."""
    return abs(betti1(a) - betti1(b))


# -----------------------------------------------------------------------------
# witness families
#
# Both families come from 18/1- and 19/1-fillings of the same 7-strand braid
# closure: p/q' surgery yields L(18p - 49q', 19q' - 7p) under one filling and
# L(19p - 49q', 18q' - 7p) under the other, and the two results differ by a
# single surgery along the dual knot.


def berge_pair(p: int, qprime: int, degeneracy: Slope | None = None) -> WitnessPair:
    """The d = 1 pair attached to surgery parameters (p, q'), gcd(p, q') = 1.

    The first parameters of source and target always differ by exactly p.
    Grade is Asserted unless a degeneracy slope is supplied and the surgery
    slope p/q' passes the distance >= 3 test.
    """
    if p <= 0:
        raise InvalidInputError(f"need p > 0, got p = {p}")
    if math.gcd(p, qprime) != 1:
        raise InvalidInputError(f"parameters ({p}, {qprime}) are not coprime")
    source = RawLensParams(18 * p - 49 * qprime, 19 * qprime - 7 * p)
    target = RawLensParams(19 * p - 49 * qprime, 18 * qprime - 7 * p)
    grade = ASSERTED
    if degeneracy is not None and wu_hyperbolic_guarantee(Slope(p, qprime), degeneracy):
        grade = CRITERION_VERIFIED
    return WitnessPair(source, target, (p, qprime), grade)


def enumerate_dh1_family(a: LensSpace, count: int, qprime_min: int) -> list[WitnessPair]:
    """First `count` family pairs (L(p, q') ~ a, partner), q' >= qprime_min.

    Walks q' = a.q (mod p) upward; every emitted source is homeomorphic to a.
    Grade is always Asserted (the family's hyperbolicity holds only above an
    ineffective parameter bound).
    """
    if a.p < 1:
        raise InvalidInputError(f"family enumeration needs p >= 1, got {a}")
    p, q = a.p, a.q
    out: list[WitnessPair] = []
    qprime = qprime_min + ((q - qprime_min) % p)
    for _ in range(max(count, 0)):
        # gcd(p, q') = gcd(p, q) = 1, so nothing is ever skipped
        out.append(
            WitnessPair(
                RawLensParams(p, qprime),
                RawLensParams(18 * p - 49 * qprime, 19 * qprime - 7 * p),
                (p, qprime),
                ASSERTED,
            )
        )
        qprime += p
    return out


def _family_evidence(lo: LensSpace, hi: LensSpace, convention: str) -> list[Evidence]:
    # Exact search: |18p - 49q'| = target.p pins q' to at most one value per
    # sign, so no range scan is needed.
    found: list[Evidence] = []
    seen: set[tuple[str, str]] = set()

    def emit(citation: str, detail: str) -> None:
        key = (citation, detail)
        if key not in seen:
            seen.add(key)
            found.append(Evidence("witness", citation, detail))

    # single family: one side is the surgered space, the other is L(p, q') itself
    for src, tgt in ((lo, hi), (hi, lo)):
        if src.p < 1:
            continue
        p = src.p
        for sign in (1, -1):
            num = 18 * p - sign * tgt.p
            if num % 49:
                continue
            qp = num // 49
            if math.gcd(p, qp) != 1:
                continue
            if normalize(RawLensParams(p, qp), convention) != src:
                continue
            raw_t = RawLensParams(18 * p - 49 * qp, 19 * qp - 7 * p)
            if normalize(raw_t, convention) != tgt:
                continue
            emit(
                CITE_SINGLE_FAMILY,
                f"L({p},{qp}) ~ {src} with partner {raw_t} ~ {tgt} (p = {p}, q' = {qp})",
            )

    # paired family: both sides come from one (p, q'), first parameters differing by p
    for p in sorted({abs(lo.p - hi.p), lo.p + hi.p}):
        if p < 1:
            continue
        for first, second in ((lo, hi), (hi, lo)):
            for sign in (1, -1):
                num = 18 * p - sign * first.p
                if num % 49:
                    continue
                qp = num // 49
                if math.gcd(p, qp) != 1:
                    continue
                raw1 = RawLensParams(18 * p - 49 * qp, 19 * qp - 7 * p)
                raw2 = RawLensParams(19 * p - 49 * qp, 18 * qp - 7 * p)
                if normalize(raw1, convention) != first:
                    continue
                if normalize(raw2, convention) != second:
                    continue
                emit(
                    CITE_PAIR_FAMILY,
                    f"{raw1} ~ {first} and {raw2} ~ {second} from (p, q') = ({p}, {qp})",
                )
    return found


# -----------------------------------------------------------------------------
# the report


def dh_bounds(a: LensSpace, b: LensSpace, convention: str = UNORIENTED) -> DistanceReport:
    """Bounds and evidence for the hyperbolic surgical distance of (a, b).

    Symmetric in its first two arguments; the report never mentions a and b
    themselves, only evidence details, which are computed on the sorted pair.
    """
    check_convention(convention)
    if is_homeomorphic(a, b, convention):
        return DistanceReport(0, 0, 0, EQUAL, (), convention)
    lo, hi = sorted((a, b), key=lambda m: (m.p, m.q))
    evidence = [
        Evidence("upper-bound", CITE_UPPER, "d = 1 for lens spaces, and d = 1 implies d_H <= 2")
    ]

    obstructions: list[Evidence] = []
    s3 = lo if lo.p == 1 else (hi if hi.p == 1 else None)
    if s3 is not None:
        other = hi if s3 is lo else lo
        if other.p == 0:
            obstructions.append(
                Evidence("obstruction", CITE_S2XS1, "d_H(S3, S2xS1) = 2")
            )
        elif other.p >= 2:
            if qr_obstructed(other):
                obstructions.append(
                    Evidence(
                        "obstruction",
                        CITE_QR,
                        f"no x satisfies x^2 = +-{other.q} (mod {other.p}), "
                        f"so {other} is not surgery on a knot in S3",
                    )
                )
            if other.p < 9:
                obstructions.append(
                    Evidence(
                        "obstruction",
                        CITE_SMALL_P,
                        f"d_H(S3, L(p,q)) = 2 whenever 2 <= p < 9; here p = {other.p}",
                    )
                )
    if obstructions:
        return DistanceReport(1, 2, 2, EXACTLY_TWO, tuple(evidence + obstructions), convention)

    witnesses = _family_evidence(lo, hi, convention)
    if witnesses:
        return DistanceReport(1, 1, 2, ONE_ASSERTED, tuple(evidence + witnesses), convention)
    return DistanceReport(1, 1, 2, UNDETERMINED, tuple(evidence), convention)
