"""Nakajima monomials in the commuting variables Y_i(n) and their crystal structure."""
from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Mapping

from .cartan import INDICES, Weight, check_index, require_dominant
from .crystal import DEFAULT_CAP, CrystalGraph, generate


class Monomial:
    """Laurent monomial prod Y_i(n)^e with every stored exponent nonzero.

    Entries are kept sorted by (i, n), so equality, hashing and the text
    form are all canonical.
    """

    __slots__ = ("_items", "_hash")

    def __init__(self, exps: Mapping[tuple[int, int], int] | Iterable[tuple[tuple[int, int], int]] = ()):
        merged: dict[tuple[int, int], int] = {}
        pairs = exps.items() if isinstance(exps, Mapping) else exps
        for (i, n), e in pairs:
            check_index(i)
            merged[(i, n)] = merged.get((i, n), 0) + e
        self._items = tuple(sorted((k, e) for k, e in merged.items() if e))
        self._hash = hash(self._items)

    @classmethod
    def y(cls, i: int, n: int, e: int = 1) -> Monomial:
        return cls({(i, n): e})

    def items(self) -> tuple[tuple[tuple[int, int], int], ...]:
        return self._items

    def exponent(self, i: int, n: int) -> int:
        for key, e in self._items:
            if key == (i, n):
                return e
        return 0

    def is_identity(self) -> bool:
        return not self._items

    def __mul__(self, other: Monomial) -> Monomial:
        return Monomial(self._items + other._items)

    def inverse(self) -> Monomial:
        return Monomial(((k, -e) for k, e in self._items))

    def __truediv__(self, other: Monomial) -> Monomial:
        return self * other.inverse()

    def __pow__(self, k: int) -> Monomial:
        return Monomial(((key, e * k) for key, e in self._items))

    def shift(self, d: int) -> Monomial:
        """Replace every Y_i(n) by Y_i(n + d)."""
        return Monomial((((i, n + d), e) for (i, n), e in self._items))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Monomial) and self._items == other._items

    def __hash__(self) -> int:
        return self._hash

    def __lt__(self, other: Monomial) -> bool:
        return self._items < other._items

    def __str__(self) -> str:
        if not self._items:
            return "1"
        return " ".join(
            f"Y{i}({n})" if e == 1 else f"Y{i}({n})^{e}" for (i, n), e in self._items
        )

    def __repr__(self) -> str:
        return f"Monomial({str(self)!r})"


IDENTITY = Monomial()

_FACTOR = re.compile(r"Y([12])\((-?\d+)\)(?:\^(-?\d+))?")


def parse_monomial(text: str) -> Monomial:
    """Parse ``Y1(2)^3 Y1(3)^-3 Y2(2)^2``; ``1`` or blank is the identity."""
    tokens = text.split()
    if tokens == ["1"]:
        return IDENTITY
    pairs = []
    for tok in tokens:
        match = _FACTOR.fullmatch(tok)
        if match is None:
            raise ValueError(f"bad monomial factor {tok!r}")
        i, n, e = match.groups()
        pairs.append(((int(i), int(n)), int(e) if e is not None else 1))
    return Monomial(pairs)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return a * b


def weight(m: Monomial) -> Weight:
    c = [0, 0]
    for (i, _n), e in m.items():
        c[i - 1] += e
    return Weight(c[0], c[1])


def _slot_exponents(i: int, m: Monomial) -> list[tuple[int, int]]:
    """(slot, exponent) pairs of Y_i in increasing slot order."""
    return [(n, e) for (j, n), e in m.items() if j == i]


def phi(i: int, m: Monomial) -> int:
    check_index(i)
    best = running = 0
    for _n, e in _slot_exponents(i, m):
        running += e
        best = max(best, running)
    return best


def epsilon(i: int, m: Monomial) -> int:
    # Every suffix counts, the full one included; the empty suffix supplies the 0.
    check_index(i)
    best = running = 0
    for _n, e in reversed(_slot_exponents(i, m)):
        running += e
        best = max(best, -running)
    return best


@dataclass(frozen=True)
class CrystalConfig:
    c12: int = 1
    c21: int = 0

    def __post_init__(self):
        if self.c12 + self.c21 != 1:
            raise ValueError(f"need c12 + c21 = 1, got c12={self.c12}, c21={self.c21}")

    @classmethod
    def from_c12(cls, c12: int) -> CrystalConfig:
        return cls(c12, 1 - c12)


DEFAULT_CONFIG = CrystalConfig()


def a_var(i: int, n: int, cfg: CrystalConfig = DEFAULT_CONFIG) -> Monomial:
    check_index(i)
    if i == 1:
        return Monomial({(1, n): 1, (1, n + 1): 1, (2, n + cfg.c21): -1})
    return Monomial({(2, n): 1, (2, n + 1): 1, (1, n + cfg.c12): -3})


def f_slot(i: int, m: Monomial) -> int | None:
    """Smallest slot where the running i-sum reaches phi_i, or None if phi_i = 0."""
    target = phi(i, m)
    if target == 0:
        return None
    running = 0
    for n, e in _slot_exponents(i, m):
        running += e
        if running == target:
            return n
    raise AssertionError("unreachable: phi is attained")


def e_slot(i: int, m: Monomial) -> int | None:
    """Largest integer n with sum_{k<=n} y_i(k) = phi_i, or None if epsilon_i = 0.

    The running sum is a step function of n; the answer is one less than the
    first listed slot after the last place the maximum is held.
    """
    if epsilon(i, m) == 0:
        return None
    target = phi(i, m)
    slots = _slot_exponents(i, m)
    last = -1 if target == 0 else None
    running = 0
    for idx, (_n, e) in enumerate(slots):
        running += e
        if running == target:
            last = idx
    assert last is not None and last + 1 < len(slots)
    return slots[last + 1][0] - 1


def f_op(i: int, m: Monomial, cfg: CrystalConfig = DEFAULT_CONFIG) -> Monomial | None:
    n = f_slot(i, m)
    if n is None:
        return None
    return m / a_var(i, n, cfg)


def e_op(i: int, m: Monomial, cfg: CrystalConfig = DEFAULT_CONFIG) -> Monomial | None:
    n = e_slot(i, m)
    if n is None:
        return None
    return m * a_var(i, n, cfg)


def is_highest(m: Monomial) -> bool:
    return all(epsilon(i, m) == 0 for i in INDICES)


def highest_monomial(w: Weight, variant: str = "standard") -> Monomial:
    w = require_dominant(w)
    if variant == "standard":
        slots = (1, 1)
    elif variant == "negative":
        slots = (-1, -2)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return Monomial({(1, slots[0]): w.c1, (2, slots[1]): w.c2})


def generate_component(
    m0: Monomial, cfg: CrystalConfig = DEFAULT_CONFIG, cap: int = DEFAULT_CAP
) -> CrystalGraph:
    """Closure of a highest-weight monomial under the lowering operators."""
    if not is_highest(m0):
        raise ValueError(f"{m0} is not a highest-weight monomial")
    return generate(
        m0,
        lambda i, m: f_op(i, m, cfg),
        key=str,
        weight=weight,
        cap=cap,
    )


