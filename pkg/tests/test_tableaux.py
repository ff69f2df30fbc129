import pytest
from hypothesis import given
from hypothesis import strategies as st

from fixtures_data import DIAGRAM_L2, DIAGRAM_L2_EDGES
from g2crystal.alphabet import LETTERS, RANK, dist
from g2crystal.cartan import LAMBDA1, LAMBDA2, Weight, weyl_dim
from g2crystal.monomial import generate_component, parse_monomial
from g2crystal.tableaux import (
    Tableau,
    column_crystals,
    column_info,
    e_tab,
    f_tab,
    generate_tableaux,
    highest_tableau,
    parse_tableau,
    signature_positions,
    tab_epsilon,
    tab_phi,
    tableau_weight,
    valid,
)
from g2crystal.xalgebra import parse_xword, xword_monomial

S13 = Tableau("S", Weight(1, 3), ("2", "2", "0"), ("3", "0", "3b", "2b"))
T13 = Tableau("T", Weight(1, 3), ("1", "2", "3", "1b"), ("3", "3b", "3b"))


class TestDist:
    @pytest.mark.parametrize("a,b,d", [("1", "0", 3), ("2", "3b", 3), ("0", "0", 0), ("1", "1b", 6), ("3", "3b", 2)])
    def test_examples(self, a, b, d):
        assert dist(a, b) == d

    def test_symmetric_and_matches_rank_gap(self):
        for a in LETTERS:
            for b in LETTERS:
                assert dist(a, b) == dist(b, a) == abs(RANK[a] - RANK[b])


class TestValidity:
    def test_examples(self):
        assert valid(S13)
        assert valid(T13)
        assert not valid(Tableau("S", Weight(0, 1), ("1",), ("0",)))
        assert not valid(Tableau("T", Weight(0, 1), ("1",), ("0",)))
        assert not valid(Tableau("T", Weight(1, 1), ("1", "2"), ("0",)))

    def test_row_lengths_checked(self):
        with pytest.raises(ValueError):
            Tableau("S", Weight(1, 1), ("1", "1"), ("2",))

    def test_highest(self):
        assert highest_tableau(LAMBDA2, "S") == Tableau("S", LAMBDA2, ("1",), ("2",))
        assert highest_tableau(LAMBDA1, "T") == Tableau("T", LAMBDA1, ("1",), ())
        assert highest_tableau(Weight(1, 1), "T") == Tableau("T", Weight(1, 1), ("1", "1"), ("2",))
        with pytest.raises(ValueError):
            highest_tableau(Weight(-1, 1))

    @pytest.mark.parametrize("kind", ["S", "T"])
    def test_highest_is_killed(self, lam, kind):
        t = highest_tableau(lam, kind)
        assert valid(t)
        assert tableau_weight(t) == lam
        assert e_tab(1, t) is None and e_tab(2, t) is None

    def test_text_round_trip(self):
        for t in (S13, T13):
            assert parse_tableau(str(t)) == t
        assert str(S13) == "kind=S; shape=1,3; top=2,2,0; bottom=3,0,3b,2b"
        with pytest.raises(ValueError):
            parse_tableau("kind=Q; shape=1,0; top=; bottom=1")


class TestColumns:
    def test_lambda1_chain(self):
        b1, _ = column_crystals()
        assert [b1.payload(k) for k in b1.vertices] == [(a,) for a in LETTERS]
        assert [i for _, i, _ in b1.edges] == [1, 2, 1, 1, 2, 1]

    def test_lambda2_has_fourteen_valid_columns(self):
        _, b2 = column_crystals()
        cols = [b2.payload(k) for k in b2.vertices]
        assert len(cols) == 14 and len(b2.edges) == 14
        assert all(valid(Tableau("S", LAMBDA2, (c[0],), (c[1],))) for c in cols)

    def test_diagram(self):
        # every listed alternative names the same monomial
        for names in DIAGRAM_L2:
            assert len({xword_monomial(parse_xword(n)) for n in names}) == 1
        monos = [xword_monomial(parse_xword(names[0])) for names in DIAGRAM_L2]
        g = generate_component(parse_monomial("Y2(1)"))
        assert {v.payload for v in g.vertices.values()} == set(monos)
        index = {m: k for k, m in enumerate(monos)}
        edges = sorted((index[g.payload(s)], i, index[g.payload(d)]) for s, i, d in g.edges)
        assert edges == sorted(DIAGRAM_L2_EDGES)

    def test_unknown_column(self):
        with pytest.raises(ValueError):
            column_info(("1", "0"))


def tensor_oracle(stats):
    """Fold the two-factor rule left to right; returns (f_at, e_at, eps, phi)."""
    f_at, e_at = (0 if stats[0][1] else None), (0 if stats[0][0] else None)
    eps, ph = stats[0]
    for k, (e2, p2) in enumerate(stats[1:], start=1):
        if ph <= e2:
            f_at = k if p2 else None
        if ph < e2:
            e_at = k
        eps, ph = eps + max(0, e2 - ph), p2 + max(0, ph - e2)
    return f_at, e_at, eps, ph


class TestTensorRule:
    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 3)), min_size=1, max_size=6))
    def test_matches_two_factor_fold(self, stats):
        f_at, e_at, _, _ = tensor_oracle(stats)
        assert signature_positions(stats) == (f_at, e_at)

    def test_small_cases(self):
        assert signature_positions([(0, 1), (1, 0)]) == (None, None)
        assert signature_positions([(1, 0), (0, 1)]) == (1, 0)
        assert signature_positions([(0, 2), (1, 0)]) == (0, None)


class TestOperators:
    def test_first_arrow(self):
        assert f_tab(2, highest_tableau(LAMBDA2, "S")) == Tableau("S", LAMBDA2, ("1",), ("3",))

    def test_invalid_input(self):
        with pytest.raises(ValueError):
            f_tab(1, Tableau("S", LAMBDA2, ("1",), ("0",)))

    def test_sixty_four(self):
        for kind in "ST":
            g = generate_tableaux(Weight(1, 1), kind)
            assert len(g.vertices) == 64
            assert all(valid(v.payload) for v in g.vertices.values())

    @pytest.mark.parametrize("kind", ["S", "T"])
    def test_size_and_inverse(self, lam, kind):
        g = generate_tableaux(lam, kind)
        assert len(g.vertices) == weyl_dim(lam)
        for s, i, d in g.edges:
            src, dst = g.payload(s), g.payload(d)
            assert valid(dst)
            assert e_tab(i, dst) == src
            assert tab_phi(i, src) == tab_phi(i, dst) + 1
            assert tab_epsilon(i, dst) == tab_epsilon(i, src) + 1

    def test_other_reading_is_rejected(self):
        # the column order opposite to the frozen one leaves the valid set
        with pytest.raises(ValueError):
            generate_tableaux(Weight(2, 0), "S", reading="left-to-right")
