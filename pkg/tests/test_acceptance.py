"""End-to-end acceptance criteria; each test records one PASS/FAIL line."""
import contextlib
import time

import pytest

from conftest import ACCEPTANCE_LINES, SUITE
from fixtures_data import CHAIN_L1, CHAIN_L1_LABELS, DIAGRAM_L2, DIAGRAM_L2_EDGES
from g2crystal.cartan import INDICES, LAMBDA1, LAMBDA2, Weight, pairing, simple_root, weyl_dim
from g2crystal.cli import main
from g2crystal.iso import VertexMap, check_isomorphic, psi, transport
from g2crystal.monomial import CrystalConfig, generate_component, highest_monomial, parse_monomial
from g2crystal.realizations import REALIZATIONS, realization
from g2crystal.tableaux import Tableau, f_tab, generate_tableaux, highest_tableau
from g2crystal.verify import product_set
from g2crystal.xalgebra import XWord, enumerate_canonical, factorize, normal_form_steps, parse_xword, xword_monomial


@contextlib.contextmanager
def criterion(number, title):
    ok = False
    try:
        yield
        ok = True
    finally:
        ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] {number:>2}. {title}")


def test_01_lambda1_chain():
    with criterion(1, "B(L1) chain from Y1(0), labels 1,2,1,1,2,1, < 1 ms"):
        seed = parse_monomial("Y1(0)")
        g = generate_component(seed)
        assert [v.payload for v in g.vertices.values()] == CHAIN_L1
        assert [(g.payload(s), i, g.payload(d)) for s, i, d in g.edges] == list(
            zip(CHAIN_L1, CHAIN_L1_LABELS, CHAIN_L1[1:])
        )
        best = float("inf")
        for _ in range(30):
            start = time.perf_counter()
            generate_component(seed)
            best = min(best, time.perf_counter() - start)
        assert best < 1e-3, f"{best * 1e3:.3f} ms"


def test_02_lambda2_diagram():
    with criterion(2, "B(L2) component of Y2(1) matches the 14-edge diagram"):
        for names in DIAGRAM_L2:
            assert len({xword_monomial(parse_xword(n)) for n in names}) == 1
        monos = [xword_monomial(parse_xword(names[0])) for names in DIAGRAM_L2]
        g = generate_component(parse_monomial("Y2(1)"))
        assert len(g.vertices) == 14
        index = {m: k for k, m in enumerate(monos)}
        assert {v.payload for v in g.vertices.values()} == set(index)
        assert sorted((index[g.payload(s)], i, index[g.payload(d)]) for s, i, d in g.edges) == sorted(DIAGRAM_L2_EDGES)


def test_03_dimensions():
    with criterion(3, "BFS sizes equal Weyl dimensions on the suite, < 5 s"):
        expected = [7, 14, 27, 77, 64, 729, 896]
        start = time.perf_counter()
        sizes = [len(generate_component(highest_monomial(lam))) for lam in SUITE]
        elapsed = time.perf_counter() - start
        assert sizes == [weyl_dim(lam) for lam in SUITE] == expected
        assert elapsed < 5.0, f"{elapsed:.2f} s"


def test_04_characterization():
    with criterion(4, "canonical words biject onto M(lam) and M'(lam)"):
        for lam in SUITE:
            for variant in ("standard", "negative"):
                images = [xword_monomial(w) for w in enumerate_canonical(lam, variant)]
                bfs = {v.payload for v in generate_component(highest_monomial(lam, variant)).vertices.values()}
                assert len(set(images)) == len(images), (lam, variant)
                assert set(images) == bfs, (lam, variant)


def test_05_normal_form():
    with criterion(5, "normal-form reference runs, product preserved per step"):
        cases = [
            (
                XWord(("2", "1", "1"), ("1b", "2b", "3b", "0")),
                [
                    XWord(("1", "2", "2"), ("3", "3b", "2b", "1b")),
                    XWord(("1", "2", "3"), ("3", "3b", "3b", "1b")),
                    XWord(("0", "2", "2"), ("2b", "3b", "0", "3")),
                ],
            ),
            (XWord(("0", "0"), ("0", "0")), [XWord(("1", "0"), ("0", "1b")), XWord(("3b", "2"), ("2b", "3"))]),
        ]
        for start, shown in cases:
            steps = normal_form_steps(start)
            target = xword_monomial(start)
            assert all(xword_monomial(s.word) == target for s in steps)
            states = [s.word for s in steps]
            assert states[-1] == shown[-1]
            positions = [states.index(w) for w in shown]
            assert positions == sorted(positions)


def test_06_isomorphisms():
    with criterion(6, "M~S, M~T (transport), M'~T on the suite; reference phi image"):
        for lam in SUITE:
            mono = generate_component(highest_monomial(lam))
            neg = generate_component(highest_monomial(lam, "negative"))
            s_graph, t_graph = generate_tableaux(lam, "S"), generate_tableaux(lam, "T")
            for a, b in ((mono, s_graph), (mono, t_graph), (neg, t_graph)):
                assert isinstance(check_isomorphic(a, b), VertexMap), lam
            ms = check_isomorphic(mono, s_graph)
            for k in mono.vertices:
                assert s_graph.payload(ms[k]) == psi(factorize(mono.payload(k), lam))
            mt = check_isomorphic(mono, t_graph)
            hw = highest_tableau(lam, "T")
            for k in mono.vertices:
                assert t_graph.payload(mt[k]) == transport(mono, k, hw, f_tab)
        lam = Weight(1, 3)
        m = parse_monomial("Y1(2)^3 Y1(3)^-3 Y1(4)^-1 Y2(2)^2 Y2(3)^-1")
        image = transport(generate_component(highest_monomial(lam)), str(m), highest_tableau(lam, "T"), f_tab)
        assert image == Tableau("T", lam, ("1", "2", "3", "1b"), ("3", "3b", "3b"))


def test_07_axioms():
    with criterion(7, "crystal axioms on every vertex of every realization: 0 violations"):
        violations = []
        for lam in SUITE:
            for name in REALIZATIONS:
                real = realization(name, lam)
                g = real.generate()
                for key, v in g.vertices.items():
                    x = v.payload
                    for i in INDICES:
                        eps, ph = real.epsilon(i, x), real.phi(i, x)
                        if ph - eps != pairing(i, v.weight):
                            violations.append((name, key, i, "phi - eps"))
                        if (g.string_length(i, key, True), g.string_length(i, key, False)) != (ph, eps):
                            violations.append((name, key, i, "string"))
                        y = real.lower(i, x)
                        if y is None:
                            continue
                        if real.raise_(i, y) != x:
                            violations.append((name, key, i, "e f"))
                        if real.weight(y) != v.weight - simple_root(i):
                            violations.append((name, key, i, "weight"))
                        if (real.epsilon(i, y), real.phi(i, y)) != (eps + 1, ph - 1):
                            violations.append((name, key, i, "eps/phi"))
        assert violations == []


def test_08_products():
    with criterion(8, "M(mu) M(tau) = M(mu + tau) for (L1,L2), (L1,L1), (L2,L2)"):
        for mu, tau in ((LAMBDA1, LAMBDA2), (LAMBDA1, LAMBDA1), (LAMBDA2, LAMBDA2)):
            whole = {v.payload for v in generate_component(highest_monomial(mu + tau)).vertices.values()}
            assert product_set(mu, tau) == whole, (mu, tau)


def test_09_configs():
    with criterion(9, "components agree for (c12, c21) in (1,0), (0,1), (2,-1)"):
        configs = [CrystalConfig(1, 0), CrystalConfig(0, 1), CrystalConfig(2, -1)]
        for lam in (Weight(1, 0), Weight(0, 1), Weight(1, 1)):
            graphs = [generate_component(highest_monomial(lam), cfg) for cfg in configs]
            for a in graphs:
                for b in graphs:
                    assert isinstance(check_isomorphic(a, b), VertexMap), lam


def test_10_determinism(tmp_path):
    with criterion(10, "two gen runs give byte-identical JSON and DOT"):
        blobs = []
        for k in range(2):
            out, dot = tmp_path / f"run{k}.json", tmp_path / f"run{k}.dot"
            assert main(["gen", "--weight", "1,3", "--real", "tableau-t", "--out", str(out), "--dot", str(dot)]) == 0
            blobs.append((out.read_bytes(), dot.read_bytes()))
        assert blobs[0] == blobs[1]


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
