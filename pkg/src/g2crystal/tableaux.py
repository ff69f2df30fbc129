"""Two-row G2 tableaux (right-justified S and left-justified T) and their crystal."""
from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache

from .alphabet import LETTER_WEIGHT, RANK, check_letter, dist, precedes
from .cartan import INDICES, LAMBDA1, LAMBDA2, ZERO, Weight, check_index, parse_weight, require_dominant
from .crystal import DEFAULT_CAP, CrystalGraph, Vertex, generate
from .monomial import Monomial, epsilon, generate_component, highest_monomial, phi
from .xalgebra import factorize

__all__ = [
    "Tableau", "dist", "valid", "tableau_violations", "highest_tableau", "column_crystals",
    "f_tab", "e_tab", "tab_epsilon", "tab_phi", "tableau_weight", "generate_tableaux",
    "parse_tableau", "READING",
]

# Columns become tensor factors read from right to left.
READING = "right-to-left"


@dataclass(frozen=True)
class Tableau:
    """Two-row tableau of shape mL1 + nL2, rows listed left to right.

    kind "S": bottom row has m+n boxes, top row n boxes, right-justified.
    kind "T": top row has m+n boxes, bottom row n boxes, left-justified.
    """

    kind: str
    shape: Weight
    top: tuple[str, ...]
    bottom: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in ("S", "T"):
            raise ValueError(f"kind must be S or T, got {self.kind!r}")
        shape = require_dominant(self.shape)
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "top", tuple(check_letter(a) for a in self.top))
        object.__setattr__(self, "bottom", tuple(check_letter(a) for a in self.bottom))
        m, n = shape.c1, shape.c2
        want = (n, m + n) if self.kind == "S" else (m + n, n)
        if (len(self.top), len(self.bottom)) != want:
            raise ValueError(
                f"{self.kind}-tableau of shape {shape} needs rows of length {want}, "
                f"got {(len(self.top), len(self.bottom))}"
            )

    def columns(self) -> list[tuple[str, ...]]:
        """Columns left to right, each read top to bottom."""
        m, n = self.shape.c1, self.shape.c2
        if self.kind == "S":
            return [(b,) for b in self.bottom[:m]] + list(zip(self.top, self.bottom[m:]))
        return list(zip(self.top[:n], self.bottom)) + [(a,) for a in self.top[n:]]

    @classmethod
    def from_columns(cls, kind: str, shape: Weight, columns: list[tuple[str, ...]]) -> Tableau:
        top = tuple(c[0] for c in columns if len(c) == 2)
        if kind == "S":
            bottom = tuple(c[-1] for c in columns)
        else:
            bottom = tuple(c[1] for c in columns if len(c) == 2)
            top = tuple(c[0] for c in columns)
        return cls(kind, shape, top, bottom)

    def __str__(self) -> str:
        return (
            f"kind={self.kind}; shape={self.shape}; "
            f"top={','.join(self.top)}; bottom={','.join(self.bottom)}"
        )


_TAB = re.compile(r"kind=(S|T);\s*shape=([^;]*);\s*top=([^;]*);\s*bottom=([^;]*)")


def parse_tableau(text: str) -> Tableau:
    match = _TAB.fullmatch(text.strip())
    if match is None:
        raise ValueError(f"bad tableau text {text!r}")
    kind, shape, top, bottom = match.groups()

    def row(s: str) -> tuple[str, ...]:
        s = s.strip()
        return tuple(x.strip() for x in s.split(",")) if s else ()

    return Tableau(kind, parse_weight(shape.strip()), row(top), row(bottom))


def _column_bound(a: str) -> int:
    return 2 if a in ("1", "0") else 3


def tableau_violations(t: Tableau) -> list[str]:
    failed = []
    rows = [r for r in (t.top, t.bottom) if r]
    if any(RANK[r[k]] > RANK[r[k + 1]] for r in rows for k in range(len(r) - 1)) or any(
        r.count("0") > 1 for r in rows
    ):
        failed.append("(i) rows not weakly increasing or 0 repeated in a row")
    cols = t.columns()
    pairs = [c for c in cols if len(c) == 2]
    if any(not precedes(a, b) and not (a == b == "0") for a, b in pairs):
        failed.append("(ii) column not strictly increasing")
    if any(dist(a, b) > _column_bound(a) for a, b in pairs):
        failed.append("(iii) column dist too large")
    for left, right in zip(cols, cols[1:]):
        if len(left) == len(right) == 2:
            a, d = left[0], right[1]
            if (a in ("2", "3", "0") and dist(a, d) < 3) or (a == "3b" and dist(a, d) < 2):
                failed.append("(iv) adjacent columns too close")
                break
    return failed


def valid(t: Tableau) -> bool:
    return not tableau_violations(t)


def tableau_weight(t: Tableau) -> Weight:
    total = ZERO
    for a in t.top + t.bottom:
        total = total + LETTER_WEIGHT[a]
    return total


def highest_tableau(lam: Weight, kind: str = "S") -> Tableau:
    lam = require_dominant(lam)
    m, n = lam.c1, lam.c2
    if kind == "S":
        return Tableau("S", lam, ("1",) * n, ("1",) * m + ("2",) * n)
    return Tableau(kind, lam, ("1",) * (m + n), ("2",) * n)


# --- column crystals --------------------------------------------------------


@dataclass(frozen=True)
class _ColumnInfo:
    monomial: Monomial
    eps: tuple[int, int]
    phi: tuple[int, int]
    f: tuple[tuple[str, ...] | None, tuple[str, ...] | None]
    e: tuple[tuple[str, ...] | None, tuple[str, ...] | None]


def _column_of(m: Monomial, lam: Weight) -> tuple[str, ...]:
    w = factorize(m, lam)
    assert w is not None
    return w.top + w.bottom


@lru_cache(maxsize=None)
def column_crystals() -> tuple[CrystalGraph, CrystalGraph]:
    """B(L1) and B(L2) with vertices relabelled by their columns (top to bottom)."""
    out = []
    for lam in (LAMBDA1, LAMBDA2):
        mono = generate_component(highest_monomial(lam))
        relabel = {k: _column_of(mono.payload(k), lam) for k in mono.vertices}
        name = {k: ",".join(c) for k, c in relabel.items()}
        graph = CrystalGraph(
            highest=name[mono.highest],
            vertices={name[k]: Vertex(relabel[k], v.weight) for k, v in mono.vertices.items()},
            edges=[(name[s], i, name[d]) for s, i, d in mono.edges],
            parents={name[k]: (name[s], i) for k, (s, i) in mono.parents.items()},
        )
        out.append(graph)
    return out[0], out[1]


@lru_cache(maxsize=None)
def _column_table() -> dict[tuple[str, ...], _ColumnInfo]:
    table = {}
    for graph, lam in zip(column_crystals(), (LAMBDA1, LAMBDA2)):
        mono = {_column_of(v.payload, lam): v.payload for v in generate_component(highest_monomial(lam)).vertices.values()}
        for key, v in graph.vertices.items():
            m = mono[v.payload]

            def image(k):
                return graph.payload(k) if k is not None else None

            table[v.payload] = _ColumnInfo(
                monomial=m,
                eps=tuple(epsilon(i, m) for i in INDICES),
                phi=tuple(phi(i, m) for i in INDICES),
                f=tuple(image(graph.f(i, key)) for i in INDICES),
                e=tuple(image(graph.e(i, key)) for i in INDICES),
            )
    return table


def column_info(col: tuple[str, ...]) -> _ColumnInfo:
    try:
        return _column_table()[tuple(col)]
    except KeyError:
        raise ValueError(f"{col} is not a column of B(L1) or B(L2)") from None


# --- tensor product rule ------------------------------------------------------


def signature_positions(stats: list[tuple[int, int]]) -> tuple[int | None, int | None]:
    """Factor indices hit by (f, e) under the tensor product rule.

    Each factor contributes eps minus signs followed by phi plus signs; a plus
    cancels against a later minus. f acts at the leftmost surviving plus, e at
    the rightmost surviving minus.
    """
    open_plus: list[int] = []
    minus: list[int] = []
    for k, (eps, ph) in enumerate(stats):
        for _ in range(eps):
            if open_plus:
                open_plus.pop()
            else:
                minus.append(k)
        open_plus.extend([k] * ph)
    f_at = open_plus[0] if open_plus else None
    e_at = minus[-1] if minus else None
    return f_at, e_at


def _factors(t: Tableau, reading: str) -> list[int]:
    idx = list(range(len(t.columns())))
    if reading == "right-to-left":
        return idx[::-1]
    if reading == "left-to-right":
        return idx
    raise ValueError(f"unknown reading {reading!r}")


def _apply(i: int, t: Tableau, raising: bool, reading: str) -> Tableau | None:
    check_index(i)
    problems = tableau_violations(t)
    if problems:
        raise ValueError(f"invalid tableau {t}: {'; '.join(problems)}")
    cols = t.columns()
    order = _factors(t, reading)
    infos = [column_info(cols[k]) for k in order]
    f_at, e_at = signature_positions([(c.eps[i - 1], c.phi[i - 1]) for c in infos])
    at = e_at if raising else f_at
    if at is None:
        return None
    info = infos[at]
    new_col = (info.e if raising else info.f)[i - 1]
    assert new_col is not None
    cols[order[at]] = new_col
    result = Tableau.from_columns(t.kind, t.shape, cols)
    problems = tableau_violations(result)
    if problems:
        raise ValueError(f"tensor rule produced invalid tableau {result}: {'; '.join(problems)}")
    return result


def f_tab(i: int, t: Tableau, reading: str = READING) -> Tableau | None:
    return _apply(i, t, False, reading)


def e_tab(i: int, t: Tableau, reading: str = READING) -> Tableau | None:
    return _apply(i, t, True, reading)


def generate_tableaux(lam: Weight, kind: str = "S", cap: int = DEFAULT_CAP, reading: str = READING) -> CrystalGraph:
    return generate(
        highest_tableau(lam, kind),
        lambda i, t: f_tab(i, t, reading),
        key=str,
        weight=tableau_weight,
        cap=cap,
    )


def _string_counts(i: int, t: Tableau, reading: str = READING) -> tuple[int, int]:
    """(epsilon_i, phi_i) of the tensor product: uncancelled minus and plus counts."""
    check_index(i)
    cols = t.columns()
    stats = [(column_info(cols[k]).eps[i - 1], column_info(cols[k]).phi[i - 1]) for k in _factors(t, reading)]
    open_plus = minus = 0
    for eps, ph in stats:
        cancelled = min(eps, open_plus)
        open_plus -= cancelled
        minus += eps - cancelled
        open_plus += ph
    return minus, open_plus


def tab_epsilon(i: int, t: Tableau) -> int:
    return _string_counts(i, t)[0]


def tab_phi(i: int, t: Tableau) -> int:
    return _string_counts(i, t)[1]
