"""Exhaustive consistency checks for one highest weight, as run by ``g2crystal verify``."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cartan import INDICES, LAMBDA1, LAMBDA2, Weight, pairing, reflect, require_dominant, simple_root, weyl_dim
from .crystal import DEFAULT_CAP, CrystalGraph
from .iso import Mismatch, check_isomorphic, psi, transport
from .monomial import DEFAULT_CONFIG, CrystalConfig, generate_component, highest_monomial
from .realizations import REALIZATIONS, Realization, realization
from .tableaux import f_tab, highest_tableau
from .xalgebra import enumerate_canonical, factorize, normal_form, xword_monomial


@dataclass(frozen=True)
class CheckResult:
    name: str
    ok: bool
    detail: str


def axiom_violations(real: Realization, graph: CrystalGraph) -> list[str]:
    """Crystal-axiom failures over every vertex of ``graph`` and both indices."""
    bad = []
    for key, vertex in graph.vertices.items():
        b = vertex.payload
        for i in INDICES:
            eps, ph = real.epsilon(i, b), real.phi(i, b)
            if ph - eps != pairing(i, vertex.weight):
                bad.append(f"phi-eps != <h_{i},wt> at {key}")
            if ph != graph.string_length(i, key, forward=True):
                bad.append(f"phi_{i} != forward string length at {key}")
            if eps != graph.string_length(i, key, forward=False):
                bad.append(f"eps_{i} != backward string length at {key}")
            y = real.lower(i, b)
            if y is not None:
                if real.raise_(i, y) != b:
                    bad.append(f"e_{i} f_{i} != id at {key}")
                if real.weight(y) != vertex.weight - simple_root(i):
                    bad.append(f"f_{i} does not lower weight by alpha_{i} at {key}")
                if real.epsilon(i, y) != eps + 1 or real.phi(i, y) != ph - 1:
                    bad.append(f"eps/phi do not shift by 1 under f_{i} at {key}")
            x = real.raise_(i, b)
            if x is not None and real.lower(i, x) != b:
                bad.append(f"f_{i} e_{i} != id at {key}")
    return bad


def symmetry_violations(graph: CrystalGraph) -> list[str]:
    weights = Counter(v.weight for v in graph.vertices.values())
    bad = []
    for i in INDICES:
        reflected = Counter({reflect(i, w): c for w, c in weights.items()})
        if reflected != weights:
            bad.append(f"weight multiset not invariant under s_{i}")
    return bad


def _result(name: str, problems: list[str], summary: str) -> CheckResult:
    if problems:
        return CheckResult(name, False, problems[0])
    return CheckResult(name, True, summary)


def run_checks(lam: Weight, cfg: CrystalConfig = DEFAULT_CONFIG, cap: int = DEFAULT_CAP) -> list[CheckResult]:
    lam = require_dominant(lam)
    results = []
    reals = {name: realization(name, lam, cfg) for name in REALIZATIONS}
    graphs = {name: real.generate(cap) for name, real in reals.items()}
    dim = weyl_dim(lam)

    for name in REALIZATIONS:
        g = graphs[name]
        results.append(_result(f"axioms[{name}]", axiom_violations(reals[name], g), f"{len(g)} vertices"))
        results.append(
            _result(
                f"dimension[{name}]",
                [] if len(g) == dim else [f"{len(g)} vertices, Weyl dimension {dim}"],
                f"{len(g)} = {dim}",
            )
        )
        results.append(_result(f"symmetry[{name}]", symmetry_violations(g), "weights W-invariant"))

    if cfg != DEFAULT_CONFIG:
        # Membership conditions, psi and the product rule are stated for (c12, c21) = (1, 0) only.
        for name in ("monomial", "monomial-neg"):
            base = realization(name, lam).generate(cap)
            res = check_isomorphic(graphs[name], base)
            problems = [str(res)] if isinstance(res, Mismatch) else []
            results.append(_result(f"config-isomorphism[{name}]", problems, f"isomorphic to (c12, c21) = (1, 0)"))
        return results

    for variant, name in (("standard", "monomial"), ("negative", "monomial-neg")):
        words = enumerate_canonical(lam, variant)
        images = [xword_monomial(w) for w in words]
        bfs = {v.payload for v in graphs[name].vertices.values()}
        problems = []
        if len(set(images)) != len(images):
            problems.append("two canonical words share a monomial")
        extra = set(images) - bfs
        missing = bfs - set(images)
        if extra:
            problems.append(f"canonical word outside the component: {min(extra)}")
        if missing:
            problems.append(f"component vertex without canonical word: {min(missing)}")
        results.append(_result(f"characterization[{variant}]", problems, f"{len(words)} words"))

    # M <-> S and M' <-> T must be realized by psi itself; M <-> T by transport.
    for src, dst, variant in (("monomial", "tableau-s", "standard"), ("monomial-neg", "tableau-t", "negative")):
        res = check_isomorphic(graphs[src], graphs[dst])
        problems = [str(res)] if isinstance(res, Mismatch) else []
        if not problems:
            for k in graphs[src].vertices:
                image = psi(factorize(graphs[src].payload(k), lam, variant))
                if res[k] != str(image):
                    problems.append(f"isomorphism sends {k} to {res[k]}, psi gives {image}")
                    break
        results.append(_result(f"isomorphism[{src}->{dst}]", problems, "psi is a crystal isomorphism"))

    res = check_isomorphic(graphs["monomial"], graphs["tableau-t"])
    problems = [str(res)] if isinstance(res, Mismatch) else []
    if not problems:
        target = highest_tableau(lam, "T")
        for k in graphs["monomial"].vertices:
            if str(transport(graphs["monomial"], k, target, f_tab)) != res[k]:
                problems.append(f"transport of {k} disagrees with the isomorphism")
                break
    results.append(_result("isomorphism[monomial->tableau-t]", problems, "transport agrees"))

    results.append(product_check(lam, cfg, cap))

    problems = [f"normal_form moves canonical word {w}" for w in enumerate_canonical(lam) if normal_form(w) != w]
    results.append(_result("normal-form fixpoints", problems[:1], "canonical words are fixed"))
    return results


def product_set(mu: Weight, tau: Weight, cfg: CrystalConfig = DEFAULT_CONFIG, cap: int = DEFAULT_CAP) -> set:
    left = generate_component(highest_monomial(mu), cfg, cap)
    right = generate_component(highest_monomial(tau), cfg, cap)
    return {a.payload * b.payload for a in left.vertices.values() for b in right.vertices.values()}


def product_check(lam: Weight, cfg: CrystalConfig = DEFAULT_CONFIG, cap: int = DEFAULT_CAP) -> CheckResult:
    if lam == Weight(0, 0):
        return CheckResult("product", True, "trivial weight")
    mu = LAMBDA1 if lam.c1 > 0 else LAMBDA2
    tau = lam - mu
    whole = {v.payload for v in generate_component(highest_monomial(lam), cfg, cap).vertices.values()}
    prods = product_set(mu, tau, cfg, cap)
    problems = []
    if prods != whole:
        diff = sorted(prods ^ whole)
        problems.append(f"M({mu})M({tau}) and M({lam}) differ at {diff[0]}")
    return _result("product", problems, f"M({lam}) = M({mu}) M({tau})")
