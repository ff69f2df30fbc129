"""The seven-letter G2 alphabet 1 < 2 < 3 < 0 < 3b < 2b < 1b and its dist function."""
from __future__ import annotations

from .cartan import Weight

LETTERS = ("1", "2", "3", "0", "3b", "2b", "1b")
RANK = {a: r for r, a in enumerate(LETTERS)}

# weight of X_a(m), independent of m
LETTER_WEIGHT = {
    "1": Weight(1, 0),
    "2": Weight(-1, 1),
    "3": Weight(2, -1),
    "0": Weight(0, 0),
    "3b": Weight(-2, 1),
    "2b": Weight(1, -1),
    "1b": Weight(-1, 0),
}


def check_letter(a: str) -> str:
    if a not in RANK:
        raise ValueError(f"unknown letter {a!r}; expected one of {', '.join(LETTERS)}")
    return a


def precedes(a: str, b: str) -> bool:
    """Strict order a < b on the alphabet."""
    return RANK[a] < RANK[b]


def successor(a: str) -> str | None:
    r = RANK[a] + 1
    return LETTERS[r] if r < len(LETTERS) else None


def predecessor(a: str) -> str | None:
    r = RANK[a] - 1
    return LETTERS[r] if r >= 0 else None


def dist(a: str, b: str) -> int:
    check_letter(a)
    check_letter(b)
    if a == b:
        return 0
    if RANK[a] > RANK[b]:
        a, b = b, a
    if a == "0":
        # 0 < b means b is barred: dist(0, ib) = 4 - i
        return 4 - int(b[0])
    if b == "0":
        return 4 - int(a)
    a_bar, b_bar = a.endswith("b"), b.endswith("b")
    if not a_bar and not b_bar:
        return int(b) - int(a)
    if a_bar and b_bar:
        # jb < ib with j > i
        return int(a[0]) - int(b[0])
    return 8 - (int(a) + int(b[0]))

