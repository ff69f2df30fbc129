"""Command-line entry point: gen, verify, map, dim, normal-form."""
from __future__ import annotations

import argparse
import sys

from .cartan import parse_weight, require_dominant, weyl_dim
from .crystal import DEFAULT_CAP, CapExceeded
from .export import to_dot, to_json, write_atomic
from .iso import psi, psi_inv, transport
from .monomial import DEFAULT_CONFIG, CrystalConfig, Monomial
from .realizations import REALIZATIONS, realization
from .tableaux import Tableau, tableau_violations
from .verify import run_checks
from .xalgebra import NormalFormError, factorize, normal_form, parse_xword, xword_monomial

EXIT_OK, EXIT_PARSE, EXIT_CAP, EXIT_VERIFY, EXIT_MEMBERSHIP = 0, 1, 2, 3, 4

_VARIANT = {"monomial": "standard", "monomial-neg": "negative"}
_KIND = {"tableau-s": "S", "tableau-t": "T"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """Argument errors exit with status 1 rather than argparse's 2 (2 means cap exceeded)."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


class MembershipError(Exception):
    pass


def _weight(text: str):
    try:
        return require_dominant(parse_weight(text))
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _config(args) -> CrystalConfig:
    return CrystalConfig.from_c12(args.c12)


def _monomial_member(name: str, lam, x: Monomial, cfg: CrystalConfig) -> bool:
    if cfg == DEFAULT_CONFIG:
        return factorize(x, lam, _VARIANT[name]) is not None
    return str(x) in realization(name, lam, cfg).generate()


def _emit(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        write_atomic(path, text)


def cmd_gen(args) -> int:
    lam = _weight(args.weight)
    cfg = _config(args)
    graph = realization(args.real, lam, cfg).generate(args.cap)
    _emit(to_json(graph, lam, args.real, cfg), args.out)
    if args.dot:
        write_atomic(args.dot, to_dot(graph, lam, args.real))
    if args.out not in (None, "-"):
        print(f"{args.real} B({lam}): {len(graph)} vertices, {len(graph.edges)} edges", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    lam = _weight(args.weight)
    results = run_checks(lam, _config(args), args.cap)
    width = max(len(r.name) for r in results)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'}  {r.name:<{width}}  {r.detail}")
    failed = [r for r in results if not r.ok]
    if failed:
        print(f"first counterexample: {failed[0].name}: {failed[0].detail}", file=sys.stderr)
        return EXIT_VERIFY
    return EXIT_OK


def _check_member(name: str, lam, x, cfg: CrystalConfig) -> None:
    if name in _VARIANT:
        assert isinstance(x, Monomial)
        if not _monomial_member(name, lam, x, cfg):
            raise MembershipError(
                f"{x} is not in the {name} component of B({lam}): it has no two-row "
                f"factorization satisfying conditions (i)-(iv)"
            )
        return
    assert isinstance(x, Tableau)
    if x.kind != _KIND[name]:
        raise MembershipError(f"{name} needs a {_KIND[name]}-tableau, got kind {x.kind}")
    if x.shape != lam:
        raise MembershipError(f"tableau has shape {x.shape}, not {lam}")
    problems = tableau_violations(x)
    if problems:
        raise MembershipError(f"tableau fails {'; '.join(problems)}")


def map_element(text: str, source: str, target: str, lam, cfg: CrystalConfig | None = None):
    """Image of ``text`` (in realization ``source``) in realization ``target``."""
    cfg = cfg or DEFAULT_CONFIG
    src = realization(source, lam, cfg)
    dst = realization(target, lam, cfg)
    try:
        x = src.parse(text)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _check_member(source, lam, x, cfg)
    if source == target:
        return x
    pair = (source, target) if cfg == DEFAULT_CONFIG else None
    if pair in (("monomial", "tableau-s"), ("monomial-neg", "tableau-t")):
        return psi(factorize(x, lam, _VARIANT[source]))
    if pair in (("tableau-s", "monomial"), ("tableau-t", "monomial-neg")):
        return psi_inv(x)
    graph = src.generate()
    return transport(graph, str(x), dst.highest, dst.lower)


def cmd_map(args) -> int:
    lam = _weight(args.weight)
    try:
        image = map_element(args.input, args.source, args.target, lam, _config(args))
    except MembershipError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MEMBERSHIP
    print(image)
    return EXIT_OK


def cmd_dim(args) -> int:
    print(weyl_dim(_weight(args.weight)))
    return EXIT_OK


def cmd_normal_form(args) -> int:
    try:
        word = parse_xword(args.input)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if word.variant != "standard":
        raise UsageError("normal-form expects factors at slots 1 and 2")
    result = normal_form(word, args.max_rewrites)
    print(result)
    print(xword_monomial(result))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="g2crystal", description="Crystal bases of U_q(G2)-modules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, real=True):
        p.add_argument("--weight", required=True, help="dominant weight m,n")
        p.add_argument("--c12", type=int, default=1, help="c12 (c21 = 1 - c12), default 1")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="vertex budget")
        if real:
            p.add_argument("--real", choices=REALIZATIONS, default="monomial")

    p = sub.add_parser("gen", help="generate B(lambda) as JSON (and DOT)")
    common(p)
    p.add_argument("--out", help="JSON output path (default stdout)")
    p.add_argument("--dot", help="DOT output path")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="run every consistency check for one weight")
    common(p, real=False)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("map", help="map an element between realizations")
    common(p, real=False)
    p.add_argument("--from", dest="source", choices=REALIZATIONS, required=True)
    p.add_argument("--to", dest="target", choices=REALIZATIONS, required=True)
    p.add_argument("input", help="monomial or tableau text")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("dim", help="Weyl dimension of V(lambda)")
    p.add_argument("--weight", required=True)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("normal-form", help="normal form of an X-word")
    p.add_argument("input", help="X-word text, e.g. 'X0(2)^2 X0(1)^2'")
    p.add_argument("--max-rewrites", type=int, default=10**4)
    p.set_defaults(func=cmd_normal_form)
    return parser


def _glue_weight(argv: list[str]) -> list[str]:
    """Turn ``--weight -1,0`` into ``--weight=-1,0`` so argparse does not read it as a flag."""
    out = []
    it = iter(argv)
    for tok in it:
        if tok == "--weight":
            nxt = next(it, None)
            out.append(tok if nxt is None else f"--weight={nxt}")
        else:
            out.append(tok)
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_glue_weight(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (CapExceeded, NormalFormError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
