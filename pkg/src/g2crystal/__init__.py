"""Crystal bases of irreducible U_q(G2)-modules via Nakajima monomials and tableaux."""
from .cartan import LAMBDA1, LAMBDA2, Weight, pairing, simple_root, weyl_dim
from .crystal import CapExceeded, CrystalGraph
from .iso import Mismatch, VertexMap, check_isomorphic, psi, psi_inv, transport
from .monomial import (
    CrystalConfig,
    Monomial,
    a_var,
    e_op,
    epsilon,
    f_op,
    generate_component,
    highest_monomial,
    parse_monomial,
    phi,
    weight,
)
from .tableaux import Tableau, e_tab, f_tab, generate_tableaux, highest_tableau, parse_tableau, valid
from .xalgebra import XWord, enumerate_canonical, is_canonical, normal_form, parse_xword, xword_monomial

__version__ = "0.1.0"
