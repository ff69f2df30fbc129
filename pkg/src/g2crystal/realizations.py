"""The four realizations of B(lambda) behind a common interface."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .cartan import Weight, require_dominant
from .crystal import DEFAULT_CAP, CrystalGraph, generate
from .monomial import (
    DEFAULT_CONFIG,
    CrystalConfig,
    e_op,
    epsilon,
    f_op,
    highest_monomial,
    parse_monomial,
    phi,
    weight,
)
from .tableaux import e_tab, f_tab, highest_tableau, parse_tableau, tab_epsilon, tab_phi, tableau_weight

REALIZATIONS = ("monomial", "monomial-neg", "tableau-s", "tableau-t")


@dataclass(frozen=True)
class Realization:
    name: str
    lam: Weight
    highest: Any
    lower: Callable[[int, Any], Any]
    raise_: Callable[[int, Any], Any]
    weight: Callable[[Any], Weight]
    epsilon: Callable[[int, Any], int]
    phi: Callable[[int, Any], int]
    parse: Callable[[str], Any]

    def generate(self, cap: int = DEFAULT_CAP) -> CrystalGraph:
        return generate(self.highest, self.lower, key=str, weight=self.weight, cap=cap)


def realization(name: str, lam: Weight, cfg: CrystalConfig = DEFAULT_CONFIG) -> Realization:
    lam = require_dominant(lam)
    if name in ("monomial", "monomial-neg"):
        variant = "standard" if name == "monomial" else "negative"
        return Realization(
            name,
            lam,
            highest_monomial(lam, variant),
            lambda i, m: f_op(i, m, cfg),
            lambda i, m: e_op(i, m, cfg),
            weight,
            epsilon,
            phi,
            parse_monomial,
        )
    if name in ("tableau-s", "tableau-t"):
        kind = "S" if name == "tableau-s" else "T"
        return Realization(name, lam, highest_tableau(lam, kind), f_tab, e_tab, tableau_weight, tab_epsilon, tab_phi, parse_tableau)
    raise ValueError(f"unknown realization {name!r}; expected one of {', '.join(REALIZATIONS)}")


def payload_from_text(name: str, text: str) -> Any:
    if name in ("monomial", "monomial-neg"):
        return parse_monomial(text)
    if name in ("tableau-s", "tableau-t"):
        return parse_tableau(text)
    raise ValueError(f"unknown realization {name!r}")
