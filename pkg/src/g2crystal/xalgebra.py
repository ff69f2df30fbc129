"""X-letter calculus: the monomials X_a(m), two-row words, normal forms, membership."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby

from .alphabet import LETTERS, RANK, check_letter, dist, precedes
from .cartan import Weight, require_dominant
from .monomial import IDENTITY, Monomial

# X_a(m) as (i, slot offset, exponent) triples, Y_0 erased.
_X_FACTORS = {
    "1": ((1, 0, 1),),
    "2": ((1, 1, -1), (2, 0, 1)),
    "3": ((1, 1, 2), (2, 1, -1)),
    "0": ((1, 1, 1), (1, 2, -1)),
    "3b": ((1, 2, -2), (2, 1, 1)),
    "2b": ((1, 2, 1), (2, 2, -1)),
    "1b": ((1, 3, -1),),
}

STANDARD_SLOTS = (2, 1)
NEGATIVE_SLOTS = (-1, -2)
MAX_REWRITES = 10**4


def x_monomial(a: str, m: int) -> Monomial:
    check_letter(a)
    return Monomial({(i, m + d): e for i, d, e in _X_FACTORS[a]})


@dataclass(frozen=True)
class XWord:
    """prod X_{top}(slots[0]) * prod X_{bottom}(slots[1]).

    Rows are kept sorted: weakly decreasing for the standard slots (2, 1),
    weakly increasing for the negative slots (-1, -2), matching the order in
    which the two characterizations index their letters.
    """

    top: tuple[str, ...] = ()
    bottom: tuple[str, ...] = ()
    slots: tuple[int, int] = STANDARD_SLOTS

    def __post_init__(self):
        slots = tuple(self.slots)
        if slots not in (STANDARD_SLOTS, NEGATIVE_SLOTS):
            raise ValueError(f"slots must be (2, 1) or (-1, -2), got {slots}")
        rev = slots == STANDARD_SLOTS
        for name in ("top", "bottom"):
            row = tuple(check_letter(a) for a in getattr(self, name))
            object.__setattr__(self, name, tuple(sorted(row, key=RANK.__getitem__, reverse=rev)))
        object.__setattr__(self, "slots", slots)

    @property
    def variant(self) -> str:
        return "standard" if self.slots == STANDARD_SLOTS else "negative"

    def shape(self) -> Weight:
        """The weight mL1 + nL2 whose row lengths this word has."""
        long, short = (self.bottom, self.top) if self.variant == "standard" else (self.top, self.bottom)
        return Weight(len(long) - len(short), len(short))

    def sort_key(self) -> tuple:
        return (tuple(RANK[a] for a in self.top), tuple(RANK[a] for a in self.bottom))

    def __str__(self) -> str:
        factors = []
        for row, slot in ((self.top, self.slots[0]), (self.bottom, self.slots[1])):
            for a, run in groupby(row):
                k = len(list(run))
                factors.append(f"X{a}({slot})" + (f"^{k}" if k > 1 else ""))
        return " ".join(factors) if factors else "1"


_XFACTOR = re.compile(r"X(1b|2b|3b|[1230])\((-?\d+)\)(?:\^(\d+))?")


def parse_xword(text: str) -> XWord:
    """Parse ``X0(2) X2(2)^2 X2b(1) ...``; the row of each factor follows from its slot."""
    letters: list[tuple[str, int]] = []
    tokens = text.split()
    if tokens == ["1"]:
        tokens = []
    for tok in tokens:
        match = _XFACTOR.fullmatch(tok)
        if match is None:
            raise ValueError(f"bad X factor {tok!r}")
        a, slot, k = match.groups()
        letters.extend([(a, int(slot))] * (int(k) if k is not None else 1))
    used = {s for _a, s in letters}
    if used <= set(STANDARD_SLOTS):
        slots = STANDARD_SLOTS
    elif used <= set(NEGATIVE_SLOTS):
        slots = NEGATIVE_SLOTS
    else:
        raise ValueError(f"slots {sorted(used)} are neither {{1, 2}} nor {{-1, -2}}")
    top = [a for a, s in letters if s == slots[0]]
    bottom = [a for a, s in letters if s == slots[1]]
    return XWord(tuple(top), tuple(bottom), slots)


def xword_monomial(w: XWord) -> Monomial:
    result = IDENTITY
    for a in w.top:
        result = result * x_monomial(a, w.slots[0])
    for a in w.bottom:
        result = result * x_monomial(a, w.slots[1])
    return result


# X_alpha(m) X_beta(m-1) = X_gamma(m) X_delta(m-1), as ((alpha, beta), (gamma, delta)).
LEMMA_PAIRS = (
    (("1", "0"), ("2", "3")),
    (("1", "3b"), ("2", "0")),
    (("1", "2b"), ("3", "0")),
    (("1", "1b"), ("0", "0")),
    (("2", "2b"), ("3", "3b")),
    (("2", "1b"), ("0", "3b")),
    (("3", "1b"), ("0", "2b")),
    (("0", "1b"), ("3b", "2b")),
)
_LEFT_TO_RIGHT = dict(LEMMA_PAIRS)
_RIGHT_TO_LEFT = {r: l for l, r in LEMMA_PAIRS}


def lemma_pairs() -> list[tuple[tuple[str, str], tuple[str, str]]]:
    return list(LEMMA_PAIRS)


def square_identity_check(m: int) -> bool:
    """X_0(m)^2 == X_3(m) X_3b(m)."""
    return x_monomial("0", m) ** 2 == x_monomial("3", m) * x_monomial("3b", m)


class NormalFormError(RuntimeError):
    """The rewrite loop ran past its cap."""


@dataclass(frozen=True)
class Rewrite:
    rule: str  # "al-1", "al-2" or "al-3"
    before: tuple[str, str]
    after: tuple[str, str]
    word: XWord  # state after the rewrite


def _pick_rewrite(w: XWord) -> tuple[str, int, int] | None:
    """Choose (rule, top index, bottom index) in display coordinates.

    Rows are drawn right-justified and increasing to the right: the bottom
    row occupies columns 0..L-1 and the top row columns L-n..L-1.
    """
    top = w.top[::-1]
    bottom = w.bottom[::-1]
    offset = len(bottom) - len(top)
    best = None
    for p, alpha in enumerate(top):
        cp = p + offset
        for cb, beta in enumerate(bottom):
            pair = (alpha, beta)
            if cb <= cp and pair in _LEFT_TO_RIGHT:
                cand = (cp - cb, -cp, 1, "al-1", p, cb)
            elif cb > cp and pair in _RIGHT_TO_LEFT:
                cand = (cb - cp, -cp, 0, "al-2", p, cb)
            else:
                continue
            if best is None or cand[:3] > best[:3]:
                best = cand
    if best is None:
        return None
    return best[3], best[4], best[5]


def normal_form_steps(w: XWord, max_rewrites: int = MAX_REWRITES) -> list[Rewrite]:
    """Run the rewriting rules al-1, al-2, al-3 to a fixpoint and return every step.

    al-1 and al-2 are tried first, farthest pair first (ties: leftmost top
    column, then al-1); al-3 only fires when neither applies.
    """
    if w.variant != "standard":
        raise ValueError("normal_form works on standard-slot words only")
    steps: list[Rewrite] = []
    while True:
        if len(steps) >= max_rewrites:
            raise NormalFormError(f"no normal form after {max_rewrites} rewrites; last state {w}")
        choice = _pick_rewrite(w)
        if choice is not None:
            rule, p, cb = choice
            top = list(w.top[::-1])
            bottom = list(w.bottom[::-1])
            before = (top[p], bottom[cb])
            after = _LEFT_TO_RIGHT[before] if rule == "al-1" else _RIGHT_TO_LEFT[before]
            top[p], bottom[cb] = after
            w = XWord(tuple(top), tuple(bottom), w.slots)
            steps.append(Rewrite(rule, before, after, w))
            continue
        for row in ("top", "bottom"):
            letters = list(getattr(w, row))
            if letters.count("0") >= 2:
                letters.remove("0")
                letters.remove("0")
                letters += ["3", "3b"]
                w = XWord(**{"top": w.top, "bottom": w.bottom, row: tuple(letters), "slots": w.slots})
                steps.append(Rewrite("al-3", ("0", "0"), ("3", "3b"), w))
                break
        else:
            return steps


def normal_form(w: XWord, max_rewrites: int = MAX_REWRITES) -> XWord:
    steps = normal_form_steps(w, max_rewrites)
    return steps[-1].word if steps else w


def _column_bound(a: str) -> int:
    return 2 if a in ("1", "0") else 3


def violations(w: XWord, lam: Weight) -> list[str]:
    """Names of the membership conditions (i)-(iv) that ``w`` fails for ``lam``."""
    lam = require_dominant(lam)
    if w.shape() != lam:
        raise ValueError(f"word {w} has shape {w.shape()}, not {lam}")
    n = lam.c2
    a, b = w.top, w.bottom
    failed = []
    if a.count("0") > 1 or b.count("0") > 1:
        failed.append("(i) repeated 0 in a row")
    if any(not precedes(a[j], b[j]) and not (a[j] == b[j] == "0") for j in range(n)):
        failed.append("(ii) column not strictly increasing")
    if any(dist(a[j], b[j]) > _column_bound(a[j]) for j in range(n)):
        failed.append("(iii) column dist too large")
    if w.variant == "standard":
        adjacent = [(a[j], b[j - 1]) for j in range(1, n)]
    else:
        adjacent = [(a[j], b[j + 1]) for j in range(n - 1)]
    for x, y in adjacent:
        if (x in ("2", "3", "0") and dist(x, y) < 3) or (x == "3b" and dist(x, y) < 2):
            failed.append("(iv) adjacent columns too close")
            break
    return failed


def is_canonical(w: XWord, lam: Weight) -> bool:
    return not violations(w, lam)


def _pair_ok(x: str, y: str) -> bool:
    return (precedes(x, y) or x == y == "0") and dist(x, y) <= _column_bound(x)


def _adjacent_ok(x: str, y: str) -> bool:
    if x in ("2", "3", "0"):
        return dist(x, y) >= 3
    if x == "3b":
        return dist(x, y) >= 2
    return True


def _tails(length: int, bound: str, increasing: bool, zero_used: bool):
    """Sorted rows of ``length`` letters continuing monotonically from ``bound``."""
    if length == 0:
        yield ()
        return
    for c in LETTERS:
        if bound is not None and (RANK[c] < RANK[bound] if increasing else RANK[c] > RANK[bound]):
            continue
        if c == "0" and zero_used:
            continue
        for rest in _tails(length - 1, c, increasing, zero_used or c == "0"):
            yield (c,) + rest


@lru_cache(maxsize=None)
def _enumerate(lam: Weight, variant: str) -> tuple[XWord, ...]:
    m, n = lam.c1, lam.c2
    increasing = variant == "negative"
    slots = NEGATIVE_SLOTS if increasing else STANDARD_SLOTS
    out: list[XWord] = []

    def columns(j, a, b, za, zb):
        if j == n:
            if increasing:
                for tail in _tails(m, a[-1] if a else None, True, za):
                    out.append(XWord(a + tail, b, slots))
            else:
                for tail in _tails(m, b[-1] if b else None, False, zb):
                    out.append(XWord(a, b + tail, slots))
            return
        for x in LETTERS:
            if j and (RANK[x] < RANK[a[-1]] if increasing else RANK[x] > RANK[a[-1]]):
                continue
            if x == "0" and za:
                continue
            if not increasing and j and not _adjacent_ok(x, b[-1]):
                continue
            for y in LETTERS:
                if j and (RANK[y] < RANK[b[-1]] if increasing else RANK[y] > RANK[b[-1]]):
                    continue
                if y == "0" and zb:
                    continue
                if not _pair_ok(x, y):
                    continue
                if increasing and j and not _adjacent_ok(a[-1], y):
                    continue
                columns(j + 1, a + (x,), b + (y,), za or x == "0", zb or y == "0")

    columns(0, (), (), False, False)
    out.sort(key=XWord.sort_key)
    return tuple(out)


def enumerate_canonical(lam: Weight, variant: str = "standard") -> list[XWord]:
    """Every word satisfying the membership conditions for ``lam``, in lexicographic order."""
    lam = require_dominant(lam)
    if variant not in ("standard", "negative"):
        raise ValueError(f"unknown variant {variant!r}")
    return list(_enumerate(lam, variant))


@lru_cache(maxsize=None)
def _factor_table(lam: Weight, variant: str) -> dict[Monomial, XWord]:
    return {xword_monomial(w): w for w in _enumerate(lam, variant)}


def factorize(m: Monomial, lam: Weight, variant: str = "standard") -> XWord | None:
    """The canonical word whose product is ``m``, or None if ``m`` is not in the component."""
    lam = require_dominant(lam)
    return _factor_table(lam, variant).get(m)
