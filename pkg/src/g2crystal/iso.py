"""Maps between realizations: psi, its inverse, transport, and an isomorphism checker."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Any, Callable

from .crystal import CrystalGraph
from .monomial import Monomial
from .tableaux import Tableau, tableau_violations
from .xalgebra import NEGATIVE_SLOTS, STANDARD_SLOTS, XWord, is_canonical, xword_monomial


class IsomorphismError(RuntimeError):
    """An operator word that works on the source is killed on the target."""


def psi(w: XWord) -> Tableau:
    """Canonical word -> S-tableau (standard slots) or T-tableau (negative slots)."""
    lam = w.shape()
    if not is_canonical(w, lam):
        raise ValueError(f"{w} is not canonical for {lam}")
    if w.variant == "standard":
        return Tableau("S", lam, w.top[::-1], w.bottom[::-1])
    return Tableau("T", lam, w.top, w.bottom)


def psi_inv_word(t: Tableau) -> XWord:
    problems = tableau_violations(t)
    if problems:
        raise ValueError(f"invalid tableau {t}: {'; '.join(problems)}")
    slots = STANDARD_SLOTS if t.kind == "S" else NEGATIVE_SLOTS
    return XWord(t.top, t.bottom, slots)


def psi_inv(t: Tableau) -> Monomial:
    return xword_monomial(psi_inv_word(t))


def transport(
    source: CrystalGraph,
    source_vertex: str,
    target_hw: Any,
    target_ops: Callable[[int, Any], Any],
) -> Any:
    """Image of ``source_vertex`` under the unique isomorphism sending highest to ``target_hw``."""
    word = source.word_to(source_vertex)
    x = target_hw
    for k, i in enumerate(word):
        x = target_ops(i, x)
        if x is None:
            raise IsomorphismError(
                f"f_{i} kills the target after prefix {word[:k]} of word {word} to {source_vertex}"
            )
    return x


@dataclass(frozen=True)
class VertexMap:
    pairs: dict[str, str]

    def __len__(self) -> int:
        return len(self.pairs)

    def __getitem__(self, key: str) -> str:
        return self.pairs[key]

    def inverse(self) -> VertexMap:
        return VertexMap({v: k for k, v in self.pairs.items()})


@dataclass(frozen=True)
class Mismatch:
    left: str | None
    right: str | None
    label: int | None
    reason: str

    def __str__(self) -> str:
        return f"{self.reason} (left={self.left}, right={self.right}, i={self.label})"


def check_isomorphic(a: CrystalGraph, b: CrystalGraph, weights: bool = True) -> VertexMap | Mismatch:
    """Walk both graphs from their highest vertices in lockstep, matching edge labels."""
    if len(a) != len(b):
        return Mismatch(a.highest, b.highest, None, f"vertex counts differ: {len(a)} != {len(b)}")
    fwd = {a.highest: b.highest}
    back = {b.highest: a.highest}
    queue = deque([a.highest])
    while queue:
        u = queue.popleft()
        v = fwd[u]
        if weights and a.weight(u) != b.weight(v):
            return Mismatch(u, v, None, f"weights differ: {a.weight(u)} != {b.weight(v)}")
        for i in (1, 2):
            for step_a, step_b, kind in ((a.f, b.f, "f"), (a.e, b.e, "e")):
                x, y = step_a(i, u), step_b(i, v)
                if (x is None) != (y is None):
                    return Mismatch(u, v, i, f"{kind}-edge present on one side only")
                if x is None:
                    continue
                if fwd.get(x, y) != y or back.get(y, x) != x:
                    return Mismatch(x, y, i, "edge targets are matched inconsistently")
                if x not in fwd:
                    fwd[x] = y
                    back[y] = x
                    queue.append(x)
    if len(fwd) != len(a):
        return Mismatch(None, None, None, "left graph is not connected from its highest vertex")
    return VertexMap(fwd)
