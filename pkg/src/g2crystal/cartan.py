"""G2 Cartan data in the fundamental-weight basis."""
from __future__ import annotations

from fractions import Fraction
from dataclasses import dataclass

# CARTAN[i][j] = <h_i, alpha_j>, indices 0-based.
CARTAN = ((2, -3), (-1, 2))
INDICES = (1, 2)


@dataclass(frozen=True, order=True)
class Weight:
    """mL1 + nL2, stored as its two fundamental-weight coefficients."""

    c1: int
    c2: int

    def __add__(self, other: Weight) -> Weight:
        return Weight(self.c1 + other.c1, self.c2 + other.c2)

    def __sub__(self, other: Weight) -> Weight:
        return Weight(self.c1 - other.c1, self.c2 - other.c2)

    def __neg__(self) -> Weight:
        return Weight(-self.c1, -self.c2)

    def __rmul__(self, k: int) -> Weight:
        return Weight(k * self.c1, k * self.c2)

    def __iter__(self):
        yield self.c1
        yield self.c2

    def is_dominant(self) -> bool:
        return self.c1 >= 0 and self.c2 >= 0

    def __str__(self) -> str:
        return f"{self.c1},{self.c2}"


ZERO = Weight(0, 0)
LAMBDA1 = Weight(1, 0)
LAMBDA2 = Weight(0, 1)


def check_index(i: int) -> int:
    if i not in INDICES:
        raise ValueError(f"index must be 1 or 2, got {i!r}")
    return i


def pairing(i: int, w: Weight) -> int:
    """<h_i, w>; in the fundamental basis this is just the i-th coefficient."""
    check_index(i)
    return w.c1 if i == 1 else w.c2


def simple_root(i: int) -> Weight:
    check_index(i)
    return Weight(CARTAN[0][i - 1], CARTAN[1][i - 1])


def fundamental_weight(i: int) -> Weight:
    check_index(i)
    return LAMBDA1 if i == 1 else LAMBDA2


def reflect(i: int, w: Weight) -> Weight:
    """Simple reflection s_i(w) = w - <h_i, w> alpha_i."""
    return w - pairing(i, w) * simple_root(i)


def parse_weight(text: str) -> Weight:
    """Parse the ``m,n`` text form."""
    parts = text.split(",")
    if len(parts) != 2 or any(p != p.strip() or not p for p in parts):
        raise ValueError(f"weight must look like 'm,n', got {text!r}")
    try:
        return Weight(int(parts[0]), int(parts[1]))
    except ValueError:
        raise ValueError(f"weight must look like 'm,n', got {text!r}") from None


def require_dominant(w: Weight) -> Weight:
    if not isinstance(w, Weight):
        w = Weight(*w)
    if not w.is_dominant():
        raise ValueError(f"weight {w} is not dominant")
    return w


# --- verification oracle -------------------------------------------------
# Nothing outside the test/verify paths calls weyl_dim.

# Positive roots in simple-root coordinates (coefficient of alpha1, alpha2).
POSITIVE_ROOTS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
# Squared lengths of the simple roots: alpha1 short, alpha2 long.
_SIMPLE_NORMS = (Fraction(2), Fraction(6))


def _root_form(a: tuple[int, int], b: tuple[int, int]) -> Fraction:
    """Symmetric form on the root lattice, (alpha_i, alpha_j) = |alpha_i|^2 a_ij / 2."""
    total = Fraction(0)
    for i in range(2):
        for j in range(2):
            total += a[i] * b[j] * _SIMPLE_NORMS[i] * CARTAN[i][j] / 2
    return total


def _coroot_pairing(w: tuple[int, int], root: tuple[int, int]) -> Fraction:
    """<w, beta^vee> for w in the fundamental basis.

    beta^vee = 2 beta / (beta, beta) and <Lambda_i, alpha_j^vee> = delta_ij, so
    writing beta = sum c_j alpha_j gives beta^vee = sum_j c_j |alpha_j|^2/|beta|^2 alpha_j^vee.
    """
    norm = _root_form(root, root)
    return sum((Fraction(w[j]) * root[j] * _SIMPLE_NORMS[j] / norm for j in range(2)), Fraction(0))


def weyl_dim(w: Weight) -> int:
    """dim V(w) by the Weyl dimension formula over the six positive roots."""
    w = require_dominant(w)
    shifted = (w.c1 + 1, w.c2 + 1)
    num = Fraction(1)
    den = Fraction(1)
    for beta in POSITIVE_ROOTS:
        num *= _coroot_pairing(shifted, beta)
        den *= _coroot_pairing((1, 1), beta)
    value = num / den
    assert value.denominator == 1
    return int(value)
