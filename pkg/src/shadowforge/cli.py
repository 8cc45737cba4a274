"""Command-line front end: ``shadowforge <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on a usage
or input error.  ``SHADOWFORGE_PREC`` overrides the default q-order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import codes, lattice, liedata, modforms, svoa
from .qseries import DEFAULT_PREC, format_rational

SERIES = {
    "eta": modforms.eta,
    "theta-z": modforms.theta_z,
    "theta-e8": modforms.theta_e8,
    "chi-half": modforms.chi_half,
    "chi8": modforms.chi8,
    "chi-fermi-shadow": modforms.chi_fermi_shadow,
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(f"{self.prog}: error: {message}")


def default_prec() -> int:
    raw = os.environ.get("SHADOWFORGE_PREC")
    if not raw:
        return DEFAULT_PREC
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"SHADOWFORGE_PREC must be a positive integer, got {raw!r}") from None
    if value <= 0:
        raise UsageError(f"SHADOWFORGE_PREC must be a positive integer, got {raw!r}")
    return value


def _rationals(text: str) -> list[Fraction]:
    return [Fraction(tok) for tok in text.replace(",", " ").split()]


def _load_lattice(source: str, gram: bool) -> lattice.Lattice:
    path = Path(source)
    if path.is_file():
        return lattice.parse_lattice_text(path.read_text(), gram=gram, name=path.stem)
    return lattice.builtin(source)


def _load_code(source: str) -> codes.BinaryCode:
    path = Path(source)
    if path.is_file():
        return codes.parse_code_text(path.read_text())
    return codes.builtin_code(source)


def _poly(args) -> svoa.CharacterPoly:
    c = svoa.as_rank(args.rank)
    if args.A is not None:
        return svoa.CharacterPoly(c, tuple(_rationals(args.A)), args.voa)
    return svoa.three_term(c, Fraction(args.dim1))


def _emit(args, text: str, payload) -> None:
    if args.json:
        print(json.dumps(payload, sort_keys=False))
    else:
        print(text)


def _rat(x: Fraction):
    return [x.numerator, x.denominator]


def cmd_qexp(args) -> int:
    s = SERIES[args.name](args.prec)
    _emit(args, str(s), s.to_json())
    return 0


def cmd_theta(args) -> int:
    lat = _load_lattice(args.lattice, args.gram)
    shift = tuple(_rationals(args.shift)) if args.shift else ()
    s = lattice.theta(lattice.Coset(lat, shift), args.prec)
    _emit(args, str(s), s.to_json())
    return 0


def cmd_shadow_lattice(args) -> int:
    lat = _load_lattice(args.lattice, args.gram)
    cv = lattice.characteristic_vectors(lat)
    s = lattice.shadow_theta(lat, args.prec)
    h = cv.min_norm / 8
    text = (
        f"char_min={format_rational(cv.min_norm)} char_count={cv.min_count} h={format_rational(h)}\n"
        f"shadow_theta={s}"
    )
    payload = {"char_min": _rat(cv.min_norm), "char_count": cv.min_count, "h": _rat(h), "shadow_theta": s.to_json()}
    _emit(args, text, payload)
    return 0


def cmd_char(args) -> int:
    p = _poly(args)
    s = svoa.character(p, args.prec)
    A = ",".join(format_rational(a) for a in p.A)
    _emit(args, f"c={format_rational(p.c)} A={A}\nchi={s}", {"poly": p.to_json(), "character": s.to_json()})
    return 0


def cmd_shadow(args) -> int:
    p = _poly(args)
    rep = svoa.shadow_report(p, args.prec)
    text = f"h={format_rational(rep.h)} dim={format_rational(rep.dim_at_h)}\nshadow={rep.shadow_char}"
    _emit(args, text, rep.to_json())
    return 0


def cmd_bounds(args) -> int:
    dim1, count = svoa.long_shadow_bounds(args.rank)
    _emit(
        args,
        f"dim1_min={format_rational(dim1)} shadow_count={format_rational(count)}",
        {"dim1_min": _rat(dim1), "shadow_count": _rat(count)},
    )
    return 0


def cmd_verify_table(args) -> int:
    checks = liedata.verify_table()
    lines = [
        f"{'PASS' if ch.passed else 'FAIL'} c={format_rational(ch.entry.c)} dim1={ch.entry.dim_v1} "
        f"expected={format_rational(ch.expected)} lie_sum={ch.lie_sum} {ch.entry.label_text}"
        for ch in checks
    ]
    _emit(args, "\n".join(lines), [ch.to_json() for ch in checks])
    return 0 if all(ch.passed for ch in checks) else 1


def cmd_corollary(args) -> int:
    lat = _load_lattice(args.lattice, args.gram)
    rep = lattice.corollary_check(lat)
    text = "\n".join(
        [
            f"lattice={lat} n={rep.n} norm1={rep.norm1} norm2={rep.norm2} dim_v1={format_rational(rep.dim_v1)}",
            f"char_min={format_rational(rep.char_min)} char_count={rep.char_count}",
            f"part1={'PASS' if rep.part1 else 'FAIL'}",
            "part2=not applicable"
            if not rep.applicable
            else f"part2 bound_met={rep.bound_met} iff_ok={rep.iff_ok} count_ok={rep.count_ok}",
            "PASS" if rep.passed else "FAIL",
        ]
    )
    _emit(args, text, rep.to_json())
    return 0 if rep.passed else 1


def cmd_construct_a(args) -> int:
    code = _load_code(args.code)
    lat = codes.construction_a(code)
    s = lattice.theta(lat, args.prec)
    text = lattice.format_lattice_text(lat) + f"self_dual={lat.is_self_dual}\ntheta={s}"
    payload = {"gram": [[_rat(x) for x in row] for row in lat.gram], "self_dual": lat.is_self_dual, "theta": s.to_json()}
    _emit(args, text, payload)
    return 0


def cmd_code_shadow(args) -> int:
    code = _load_code(args.code)
    weights = codes.weight_enumerator(code)
    shadow = codes.code_shadow_weights(code)
    fmt = lambda m: " ".join(f"{w}:{c}" for w, c in m.items())
    _emit(args, f"weights {fmt(weights)}\nshadow {fmt(shadow)}", codes.weights_json(shadow))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="shadowforge", description="Shadow characters of self-dual SVOAs, lattices and codes.")
    parser.add_argument("--json", action="store_true", help="emit JSON instead of text")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON instead of text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    add = lambda name, **kw: sub.add_parser(name, parents=[common], **kw)

    def with_prec(p):
        p.add_argument("--prec", type=int, default=None, help="q-order past the leading exponent")
        return p

    def with_lattice(p):
        p.add_argument("--lattice", required=True, help="builtin name (z8, d12plus, e8, ...) or basis file")
        p.add_argument("--gram", action="store_true", help="lattice file holds a Gram matrix")
        return p

    def with_poly(p):
        p.add_argument("--rank", required=True, help="rank c, e.g. 16, 23.5 or 47/2")
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--A", help="comma separated coefficients A_0,...,A_floor(c/8)")
        g.add_argument("--dim1", help="dim V_1 for a rank < 24 SVOA with no weight-1/2 states")
        p.add_argument("--voa", action="store_true", help="treat as a pure VOA (shadow = itself)")
        return p

    p = with_prec(add("qexp", help="print a named q-series"))
    p.add_argument("name", choices=sorted(SERIES))
    p.set_defaults(func=cmd_qexp)

    p = with_prec(with_lattice(add("theta", help="theta series of a lattice coset")))
    p.add_argument("--shift", help="coset shift in basis coordinates, comma separated")
    p.set_defaults(func=cmd_theta)

    p = with_prec(with_lattice(add("shadow-lattice", help="characteristic vectors and shadow theta")))
    p.set_defaults(func=cmd_shadow_lattice)

    p = with_prec(with_poly(add("char", help="character of an SVOA")))
    p.set_defaults(func=cmd_char)

    p = with_prec(with_poly(add("shadow", help="shadow character, h(V') and its multiplicity")))
    p.set_defaults(func=cmd_shadow)

    p = add("bounds", help="long-shadow dim V_1 bound and shadow count")
    p.add_argument("--rank", required=True)
    p.set_defaults(func=cmd_bounds)

    p = add("verify-table", help="check every row of the classification table")
    p.set_defaults(func=cmd_verify_table)

    p = with_lattice(add("corollary", help="lattice analogues of the shadow theorems"))
    p.set_defaults(func=cmd_corollary)

    p = with_prec(add("construct-a", help="Construction A lattice of a binary code"))
    p.add_argument("--code", required=True, help="builtin (rep2, e8code) or code file")
    p.set_defaults(func=cmd_construct_a)

    p = add("code-shadow", help="weight enumerator and shadow weights of a self-dual code")
    p.add_argument("--code", required=True)
    p.set_defaults(func=cmd_code_shadow)
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "prec", None) is None and hasattr(args, "prec"):
            args.prec = default_prec()
        return args.func(args)
    except UsageError as exc:
        print(exc, file=sys.stderr)
        return 2
    except (ValueError, ZeroDivisionError) as exc:
        print(f"shadowforge: error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
