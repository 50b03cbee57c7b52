"""Two-generator group presentations and a bounded Tietze-style simplifier.

Words
-----
A word is a tuple of nonzero signed integers: token +i is the i-th generator,
-i its inverse.  With the default generator names ("a", "b") the word
(1, 1, 2, -1) is a a b a^-1.  The flat text form uses one letter per token,
uppercase for inverses ("aabA"); it is the machine-friendly rendering and
round-trips through `word_from_string`.  `power_notation` gives the human
rendering: syllables are collapsed to powers ("a^3") and short-period runs of
at most two syllables are collapsed to parenthesised powers ("(a^3b)^3");
longer periodicities are deliberately left expanded.

Presentations
-------------
For a knot k(p, q; u) and a surgery coefficient r, `presentation(p, q, u, r)`
builds the standard two-relator presentation of the fundamental group of the
surgered manifold.  With s_j the basic sequence of (p, q) and psi the index of
u in it:

    R1 = prod_{j=1..psi} W1(j),  W1(j) = a        if s_j > u
                                        a b^r     if s_j = u
                                        a b       if s_j < u
    R2 = prod_{j=1..p}   W2(j),  W2(j) = a        if s_j >= u
                                        a b       if s_j < u

b^0 is the empty word, so r = 0 drops the surgery letter entirely.

Simplification
--------------
`simplify` runs three rewriting rules to a fixpoint or until the fuel bound:

1. free and cyclic reduction of every relator, dropping empty ones;
2. elimination of a generator that occurs exactly once in some relator
   (substitute-and-remove; scanned in relator order, then generator order);
3. greedy overlap shortening: if a relator contains a subword matching more
   than half of a cyclic conjugate of another relator or its inverse, the
   subword is replaced by the inverse of the complement.  The longest relator
   is tried first, ties broken by lexicographic word order.

Rule 3 strictly shortens the total relator length and rule 2 removes a
generator, so every run terminates; the fuel bound (rounds of the loop) only
matters as a hard stop for pathological inputs.  The outcome reports the group
when the rules finish it off (trivial, or cyclic of known order) and otherwise
returns the residual presentation unchanged, with a step log either way.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import InvalidInputError
from .onebridge import basic_sequence, psi

Word = tuple[int, ...]

DEFAULT_FUEL = 10_000

TRIVIAL_GROUP = "Trivial"
CYCLIC_GROUP = "CyclicOfOrder"
INCONCLUSIVE = "Inconclusive"


# ---------------------------------------------------------------------------
# words


def _check_word(word: Word, num_gens: int) -> None:
    for t in word:
        if t == 0 or abs(t) > num_gens:
            raise InvalidInputError(f"token {t} outside generator range 1..{num_gens}")


def free_reduce(word: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    out: list[int] = []
    for t in word:
        if out and out[-1] == -t:
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def cyclic_reduce(word: Word) -> Word:
    """Freely reduce, then strip matching first/last inverse pairs."""
    w = free_reduce(word)
    lo, hi = 0, len(w)
    while hi - lo >= 2 and w[lo] == -w[hi - 1]:
        lo += 1
        hi -= 1
    return w[lo:hi]


def invert_word(word: Word) -> Word:
    return tuple(-t for t in reversed(word))


def word_from_string(text: str, gens: tuple[str, ...] = ("a", "b")) -> Word:
    """Parse the flat letter form; uppercase letters are inverses."""
    index = {name: i + 1 for i, name in enumerate(gens)}
    out = []
    for ch in text:
        low = ch.lower()
        if low not in index:
            raise InvalidInputError(f"unknown generator letter {ch!r}")
        out.append(index[low] if ch == low else -index[low])
    return tuple(out)


def word_to_string(word: Word, gens: tuple[str, ...] = ("a", "b")) -> str:
    """Flat letter form of a word; inverse of `word_from_string`."""
    _check_word(word, len(gens))
    parts = []
    for t in word:
        name = gens[abs(t) - 1]
        parts.append(name if t > 0 else name.upper())
    return "".join(parts)


def _syllables(word: Word) -> list[tuple[int, int]]:
    # (generator, signed exponent); adjacent same-sign tokens are merged
    syls: list[tuple[int, int]] = []
    for t in word:
        g, e = abs(t), (1 if t > 0 else -1)
        if syls and syls[-1][0] == g and (syls[-1][1] > 0) == (e > 0):
            syls[-1] = (g, syls[-1][1] + e)
        else:
            syls.append((g, e))
    return syls


def _render_syllables(syls: list[tuple[int, int]], gens: tuple[str, ...]) -> str:
    parts = []
    for g, e in syls:
        name = gens[g - 1]
        parts.append(name if e == 1 else f"{name}^{e}")
    return "".join(parts)


def power_notation(word: Word, gens: tuple[str, ...] = ("a", "b")) -> str:
    """Compressed rendering: power syllables, repeated chunks parenthesised.

    The word is cut into chunks of non-decreasing generator index (the natural
    a^j b^k pieces of the presentations built here); consecutive equal chunks
    collapse to a parenthesised power, e.g. (a^3b)^3a^5b.
    """
    _check_word(word, len(gens))
    if not word:
        return "1"
    syls = _syllables(word)
    chunks: list[tuple[tuple[int, int], ...]] = []
    cur = [syls[0]]
    for s in syls[1:]:
        if s[0] < cur[-1][0]:
            chunks.append(tuple(cur))
            cur = [s]
        else:
            cur.append(s)
    chunks.append(tuple(cur))
    out = []
    i = 0
    while i < len(chunks):
        j = i
        while j + 1 < len(chunks) and chunks[j + 1] == chunks[i]:
            j += 1
        reps = j - i + 1
        body = _render_syllables(list(chunks[i]), gens)
        out.append(f"({body})^{reps}" if reps >= 2 else body)
        i = j + 1
    return "".join(out)


# ---------------------------------------------------------------------------
# presentations


@dataclass(frozen=True)
class GroupPresentation:
    """A finite presentation; relators are stored freely and cyclically reduced.

    Conjugating a relator does not change the group, so empty relators are
    dropped and each stored relator is a cyclically reduced word over the
    generators in `gens`.
    """

    relators: tuple[Word, ...]
    gens: tuple[str, ...] = ("a", "b")

    def __post_init__(self) -> None:
        if not self.gens or len(set(self.gens)) != len(self.gens):
            raise InvalidInputError(f"generator names must be distinct and nonempty: {self.gens}")
        reduced = []
        for w in self.relators:
            _check_word(tuple(w), len(self.gens))
            w2 = cyclic_reduce(tuple(w))
            if w2:
                reduced.append(w2)
        object.__setattr__(self, "relators", tuple(reduced))

    def __str__(self) -> str:
        rels = ", ".join(power_notation(w, self.gens) for w in self.relators)
        return f"<{', '.join(self.gens)} | {rels}>"


def presentation(p: int, q: int, u: int, r: int) -> GroupPresentation:
    """Fundamental group of r-surgery along k(p, q; u), as a 2-relator group."""
    seq = basic_sequence(p, q).values
    bound = psi(p, q, u)
    a, b = 1, 2
    w1: list[int] = []
    for j in range(1, bound + 1):
        s = seq[j - 1]
        w1.append(a)
        if s == u:
            w1.extend([b] * r if r >= 0 else [-b] * (-r))
        elif s < u:
            w1.append(b)
    w2: list[int] = []
    for s in seq:
        w2.append(a)
        if s < u:
            w2.append(b)
    return GroupPresentation((tuple(w1), tuple(w2)))


def _signed_count(word: Word, gen: int) -> int:
    return sum(1 if t == gen else -1 if t == -gen else 0 for t in word)


def abelianization(g: GroupPresentation) -> tuple[tuple[tuple[int, int], ...], int]:
    """Exponent-sum matrix and |H1| = |det| for a 2-generator 2-relator group.

    A determinant of 0 means the abelianization is infinite.
    """
    if len(g.gens) != 2 or len(g.relators) != 2:
        raise InvalidInputError(
            "abelianization matrix needs exactly two generators and two relators, "
            f"got {len(g.gens)} and {len(g.relators)}"
        )
    rows = tuple((_signed_count(w, 1), _signed_count(w, 2)) for w in g.relators)
    det = rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    return rows, abs(det)


# ---------------------------------------------------------------------------
# simplification


@dataclass(frozen=True)
class SimplifyOutcome:
    """Result of `simplify`.

    verdict is "Trivial", "CyclicOfOrder" (order 0 meaning infinite cyclic) or
    "Inconclusive", in which case `residual` holds the stuck presentation.
    """

    verdict: str
    order: int | None = None
    residual: GroupPresentation | None = None
    steps: tuple[str, ...] = field(default=())


def _diagnose(rels: list[Word], live: set[int]) -> SimplifyOutcome | None:
    # terminal shapes only; anything else keeps rewriting
    if not live:
        return SimplifyOutcome(TRIVIAL_GROUP)
    if len(live) == 1:
        if not rels:
            return SimplifyOutcome(CYCLIC_GROUP, order=0)
        if len(rels) == 1:
            n = abs(_signed_count(rels[0], abs(rels[0][0])))
            if n == 1:
                return SimplifyOutcome(TRIVIAL_GROUP)
            return SimplifyOutcome(CYCLIC_GROUP, order=n)
        return None
    if rels and all(len(w) == 1 for w in rels) and {abs(w[0]) for w in rels} == live:
        return SimplifyOutcome(TRIVIAL_GROUP)
    return None


def _try_eliminate(rels: list[Word], live: set[int], gens: tuple[str, ...], log: list[str]) -> bool:
    for i, w in enumerate(rels):
        counts: dict[int, int] = {}
        for t in w:
            counts[abs(t)] = counts.get(abs(t), 0) + 1
        for g in sorted(live):
            if counts.get(g, 0) != 1:
                continue
            w = rels.pop(i)
            k = next(idx for idx, t in enumerate(w) if abs(t) == g)
            w = w[k:] + w[:k]
            tail = w[1:]
            rep_pos = invert_word(tail) if w[0] > 0 else tail
            rep_neg = invert_word(rep_pos)
            new_rels = []
            for v in rels:
                out: list[int] = []
                for t in v:
                    if t == g:
                        out.extend(rep_pos)
                    elif t == -g:
                        out.extend(rep_neg)
                    else:
                        out.append(t)
                v2 = cyclic_reduce(tuple(out))
                if v2:
                    new_rels.append(v2)
            rels[:] = new_rels
            live.discard(g)
            log.append(f"eliminated generator {gens[g - 1]} via relator {i + 1}")
            return True
    return False


def _best_overlap(rels: list[Word], ti: int) -> tuple[int, int, int, int, int] | None:
    """Longest match of a subword of rels[ti] against > half of a cyclic
    conjugate of another relator or its inverse.

    Returns (length, other_index, sign, conjugate_start, target_start) or None.
    """
    target = rels[ti]
    best: tuple[int, int, int, int, int] | None = None
    for oi, other in enumerate(rels):
        if oi == ti:
            continue
        n = len(other)
        for sign, base in ((1, other), (-1, invert_word(other))):
            ss = base + base
            prev = [0] * (len(ss) + 1)
            for i, t_tok in enumerate(target):
                cur = [0] * (len(ss) + 1)
                for j, s_tok in enumerate(ss):
                    if t_tok != s_tok:
                        continue
                    run = prev[j] + 1
                    cur[j + 1] = run
                    length = min(run, n)
                    j0 = j + 1 - length
                    if 2 * length > n and j0 < n:
                        if best is None or length > best[0]:
                            best = (length, oi, sign, j0, i + 1 - length)
                prev = cur
    return best


def _try_shorten(rels: list[Word], log: list[str]) -> bool:
    order = sorted(range(len(rels)), key=lambda i: (-len(rels[i]), rels[i]))
    for ti in order:
        hit = _best_overlap(rels, ti)
        if hit is None:
            continue
        length, oi, sign, j0, i0 = hit
        other = rels[oi]
        base = other if sign > 0 else invert_word(other)
        ss = base + base
        complement = ss[j0 + length : j0 + len(other)]
        target = rels[ti]
        neww = cyclic_reduce(target[:i0] + invert_word(complement) + target[i0 + length :])
        side = "" if sign > 0 else " (inverted)"
        log.append(
            f"shortened relator {ti + 1} against relator {oi + 1}{side}: "
            f"{len(target)} -> {len(neww)} tokens"
        )
        if neww:
            rels[ti] = neww
        else:
            del rels[ti]
        return True
    return False


def _residual(rels: list[Word], live: set[int], gens: tuple[str, ...]) -> GroupPresentation:
    order = sorted(live)
    remap = {g: k + 1 for k, g in enumerate(order)}
    names = tuple(gens[g - 1] for g in order)
    new_rels = tuple(
        tuple(remap[abs(t)] * (1 if t > 0 else -1) for t in w) for w in rels
    )
    return GroupPresentation(new_rels, names)


def simplify(g: GroupPresentation, fuel: int = DEFAULT_FUEL) -> SimplifyOutcome:
    """Run the three rules until a recognised group, a fixpoint, or fuel runs out.

    One unit of fuel is one round of the main loop (at most one elimination or
    one shortening).  The order of rule application is deterministic, so equal
    inputs with equal fuel give equal outcomes.
    """
    if fuel <= 0:
        raise InvalidInputError(f"fuel must be positive, got {fuel}")
    rels = [w for w in g.relators if w]
    live = set(range(1, len(g.gens) + 1))
    log: list[str] = []
    for _ in range(fuel):
        done = _diagnose(rels, live)
        if done is not None:
            return SimplifyOutcome(done.verdict, done.order, steps=tuple(log))
        if _try_eliminate(rels, live, g.gens, log):
            continue
        if _try_shorten(rels, log):
            continue
        log.append("no rule applies; stopping")
        return SimplifyOutcome(
            INCONCLUSIVE, residual=_residual(rels, live, g.gens), steps=tuple(log)
        )
    log.append(f"fuel exhausted after {fuel} rounds")
    return SimplifyOutcome(
        INCONCLUSIVE, residual=_residual(rels, live, g.gens), steps=tuple(log)
    )
