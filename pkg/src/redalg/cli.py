"""Command line front-end.

Exit status: 0 when every verification passes, 1 on a failed verification,
2 on usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import drsl2, ore, weylmod
from .coeff import RatFunc
from .expr import ParseError, parse, render_element, to_json
from .ncalg import NCElement, weight_of
from .report import Report
from .rewrite import (
    DEFAULT_MAX_STEPS,
    IncompletePresentation,
    InvalidPresentation,
    Presentation,
    TerminationGuardTripped,
    check_confluence,
    enumerate_basis,
    load,
    normal_form,
    pbw_transition,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _presentation(args) -> Presentation:
    if args.presentation:
        return load(args.presentation)
    return drsl2.build().presentation


def _is_drsl2(args) -> bool:
    return not args.presentation


def _parse(src: str, p: Presentation) -> NCElement:
    return parse(src, p.generators)


def _element_output(args, p: Presentation, el: NCElement, meta: dict) -> tuple[int, str]:
    meta = {"presentation": p.name or "custom", **meta}
    if _is_drsl2(args):
        meta["sign_convention"] = drsl2.SIGN_CONVENTION
    if args.json:
        return EXIT_OK, json.dumps({**to_json(el, p.generators), "meta": meta}, indent=2, sort_keys=True)
    return EXIT_OK, render_element(el, p.generators)


def cmd_normalize(args) -> tuple[int, str]:
    p = _presentation(args)
    el = _parse(args.expr, p)
    nf = normal_form(p, el, max_steps=args.max_steps)
    return _element_output(args, p, nf, {"command": "normalize", "input": args.expr})


def cmd_commutator(args) -> tuple[int, str]:
    p = _presentation(args)
    a, b = _parse(args.a, p), _parse(args.b, p)
    c = drsl2.commutator(a, b, p, max_steps=args.max_steps)
    return _element_output(args, p, c, {"command": "commutator", "input": [args.a, args.b]})


def center_report(max_steps: int = DEFAULT_MAX_STEPS) -> Report:
    d = drsl2.build()
    rep = Report("center-check", meta={"sign_convention": drsl2.SIGN_CONVENTION})
    h = RatFunc.var("h")
    probes = [(g.name, NCElement.word(g)) for g in d.generators]
    probes.append(("f(h)=(h^2+1)/(h+5)", NCElement.scalar((h**2 + 1) / (h + 5))))
    for cname, c in (("C1", d.c1), ("C2", d.c2)):
        for gname, g in probes:
            z = drsl2.commutator(c, g, max_steps=max_steps)
            rep.add(f"[{cname}, {gname}] = 0", z.is_zero(), render_element(z, d.generators))
        rep.add(f"weight({cname}) = 0", weight_of(c) == 0)
    z = drsl2.commutator(d.c1, d.c2, max_steps=max_steps)
    rep.add("[C1, C2] = 0", z.is_zero(), render_element(z, d.generators))
    return rep


def confluence_report(p: Presentation, max_steps: int = DEFAULT_MAX_STEPS) -> Report:
    cr = check_confluence(p, max_steps=max_steps)
    rep = Report("confluence-check", meta={"presentation": p.name or "custom"})
    for t in cr.triples:
        rep.add(
            f"overlap {' '.join(t.triple)} resolves",
            t.equal,
            {
                "left_first": render_element(t.left_first, p.generators),
                "right_first": render_element(t.right_first, p.generators),
            },
        )
    rep.meta["triples"] = len(cr.triples)
    return rep


def pbw_report(p: Presentation, max_deg: int, max_steps: int = DEFAULT_MAX_STEPS) -> Report:
    tr = pbw_transition(p, max_deg, max_steps=max_steps)
    top = [w for w in tr.rows if len(w) == max_deg]
    rep = Report("pbw-count", meta={"max_deg": max_deg, "ordered_monomials": len(tr.basis)})
    rep.add(f"{len(tr.basis)} ordered monomials of length <= {max_deg}",
            len(tr.basis) == len(enumerate_basis(p, max_deg)))
    rep.add(f"all {len(top)} words of length {max_deg} normalize into the ordered span",
            not [w for w in tr.outside_span() if len(w) == max_deg])
    rep.add("every word of length <= max_deg normalizes into the ordered span", not tr.outside_span())
    rep.add("ordered monomials map to themselves", tr.identity_on_basis())
    return rep


def module_report(seed: int, trials: int, max_deg: int) -> Report:
    rep = Report("module-check", meta={"sign_convention": drsl2.SIGN_CONVENTION})
    rep.extend(weylmod.relation_report(), "relation: ")
    rep.extend(weylmod.oracle_agreement(seed, trials, max_deg), "oracle: ")
    s1, s2 = weylmod.casimir_scalars()
    rep.add("C1 acts by nu", s1 == RatFunc.var("nu"), str(s1))
    rep.add("C2 acts by a j-independent scalar", "j" not in s2.variables(), str(s2))
    iso = weylmod.verify_iso2_on_module()
    rep.extend(iso, "iso2: ")
    rep.meta.update(iso.meta)
    return rep


def ore_report(a: NCElement, k: int, p: Presentation) -> Report:
    s = ore.Denominator(k)
    w = ore.ore_right(a, s)
    defect = ore.witness_defect(a, s, w, p)
    rep = Report("ore", meta={
        "s": str(s.coeff()),
        "s_tilde": str(w.s_tilde),
        "a_tilde": render_element(w.a_tilde, p.generators),
    })
    rep.add("normal_form(a s~ - s a~) = 0", defect.is_zero(), render_element(defect, p.generators))
    rep.add("s~ is a product of denominators h + integer", all(isinstance(o, int) for o in w.offsets),
            list(w.offsets))
    van = ore.ore_vanishing(a, s)
    rep.meta["vanishing"] = "not applicable" if van is None else f"s~ = {van.s_tilde}"
    return rep


def _report_output(args, rep: Report) -> tuple[int, str]:
    text = rep.to_json() if args.json else rep.to_text()
    return (EXIT_OK if rep.passed else EXIT_FAIL), text


def cmd_center(args):
    _require_drsl2(args)
    return _report_output(args, center_report(args.max_steps))


def cmd_confluence(args):
    return _report_output(args, confluence_report(_presentation(args), args.max_steps))


def cmd_pbw(args):
    return _report_output(args, pbw_report(_presentation(args), args.max_deg or 4, args.max_steps))


def cmd_module(args):
    _require_drsl2(args)
    return _report_output(args, module_report(args.seed, args.trials or 100, args.max_deg or 3))


def cmd_prop2(args):
    return _report_output(args, weylmod.prop2_report())


def cmd_ore(args):
    p = _presentation(args)
    return _report_output(args, ore_report(_parse(args.expr, p), args.k, p))


def cmd_zero_divisor(args):
    _require_drsl2(args)
    rep = drsl2.zero_divisor_probe(args.seed, args.trials or 200, args.max_deg or 3,
                                   max_steps=args.max_steps)
    return _report_output(args, rep)


def _require_drsl2(args):
    if not _is_drsl2(args):
        raise UsageError("this command only applies to the built-in DR(sl(2)) presentation")


def _positive(s: str) -> int:
    n = int(s)
    if n <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {s}")
    return n


def _u64(s: str) -> int:
    n = int(s)
    if not 0 <= n < 2**64:
        raise argparse.ArgumentTypeError(f"seed out of range: {s}")
    return n


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit JSON")
    common.add_argument("--seed", type=_u64, default=0)
    common.add_argument("--max-steps", type=_positive, default=DEFAULT_MAX_STEPS)
    common.add_argument("--trials", type=_positive, default=None)
    common.add_argument("--max-deg", type=_positive, default=None)
    common.add_argument("--presentation", metavar="PATH", default=None,
                        help="presentation file (generators line plus 'I J -> expr' rules)")

    parser = argparse.ArgumentParser(prog="redalg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=func)
        return sp

    add("normalize", cmd_normalize, "normal form of an expression").add_argument("expr")
    sp = add("commutator", cmd_commutator, "normal form of [a, b]")
    sp.add_argument("a")
    sp.add_argument("b")
    add("center-check", cmd_center, "commutators of C1, C2 with generators and coefficients")
    add("confluence-check", cmd_confluence, "resolve every overlap I > J > K")
    add("pbw-count", cmd_pbw, "ordered-monomial span of all words up to --max-deg (default 4)")
    add("module-check", cmd_module, "V_M oracle: relations, random agreement, Casimir scalars")
    add("prop2-solve", cmd_prop2, "solve and verify the V_M recurrences")
    sp = add("ore", cmd_ore, "Ore witness for denominator h + k")
    sp.add_argument("expr")
    sp.add_argument("--k", type=int, default=0)
    add("zero-divisor-probe", cmd_zero_divisor, "random products are nonzero")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, out = args.func(args)
    except (ParseError, UsageError, InvalidPresentation, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (IncompletePresentation, TerminationGuardTripped) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_FAIL
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
