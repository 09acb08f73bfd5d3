"""Command-line front end: ``eulerchar torsion | chi-h | gamma1 | zeta``.

Rationals are printed as ``p/q`` text. Exit codes: 0 success, 2 usage,
3 hypothesis violation, 4 field-data error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction
from typing import Any, Sequence

from .exactnum import CyclotomicInt, QuadRing
from .eulerchar import chi_h_gamma1_ring, chi_h_gamma1_z, chi_h_glm
from .reptrace import RepSpec
from .torsion import (
    FieldKind,
    GroupFamily,
    GroupKind,
    GroupSpec,
    HypothesisViolation,
    torsion_catalog,
    vanishing_bound,
    vanishing_reason,
)
from .zetam1 import FieldDataError, load_field_data, parse_rational, solve_identity, torsion_contribution

EXIT_OK, EXIT_USAGE, EXIT_HYPOTHESIS, EXIT_DATA = 0, 2, 3, 4

_FIELD_OF = {
    GroupFamily.GLmZ: FieldKind.RATIONAL,
    GroupFamily.GLmGauss: FieldKind.GAUSSIAN,
    GroupFamily.GLmEisenstein: FieldKind.EISENSTEIN,
}
_RING_OF = {GroupFamily.GLmZ: "Z", GroupFamily.GLmGauss: "gauss", GroupFamily.GLmEisenstein: "eisenstein"}

BROWN = "Brown's formula: sum over torsion classes of chi(centralizer) * Tr(A^-1 | V)"
BLOCKS = "block-diagonal families weighted by |resultant| * chi(centralizer)"


class UsageError(Exception):
    pass


def fmt(q: Fraction) -> str:
    return str(Fraction(q))


def _rep_label(rep: RepSpec) -> str:
    label = f"S^{rep.sym_power} V_{rep.dim}"
    return label + " (x) det" if rep.det_twist else label


# --- commands ------------------------------------------------------------------------------


def cmd_torsion(args) -> dict[str, Any]:
    try:
        group = GroupSpec.parse(args.group)
        classes = torsion_catalog(group)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rows = [
        {
            "label": c.label,
            "representative": [[int(x) for x in row] for row in c.rep.tolist()],
            "order": c.order,
            "centralizer": c.centralizer_desc,
            "chi": fmt(c.chi_c),
        }
        for c in classes
    ]
    provenance = ["explicit torsion conjugacy class catalog"]
    if any(c.printed_chi is not None for c in classes):
        provenance.append("C2 x C2 centralizers carry chi = +1/4 (1/|G| for a finite group)")
    return {"command": "torsion", "query": {"group": args.group}, "result": rows, "provenance": provenance}


def cmd_chi_h(args) -> dict[str, Any]:
    try:
        group = GroupSpec.parse(args.group)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    rep = RepSpec(group.m, args.sym, int(args.det))
    field = _FIELD_OF[group.family]
    provenance = [BROWN, BLOCKS]
    if vanishing_bound(field, GroupKind.GL, group.m):
        provenance = [vanishing_reason(field, GroupKind.GL, group.m)]
    value = chi_h_glm(_RING_OF[group.family], group.m, rep)
    query = {"group": args.group, "rep": _rep_label(rep)}
    return {"command": "chi-h", "query": query, "result": fmt(value), "provenance": provenance}


_PURE = re.compile(r"^([+-]?)(\d*)\*?([iw])$")
_MIXED = re.compile(r"^([+-]?\d+)(?:([+-])(\d*)\*?([iw]))?$")


def parse_ideal(text: str, ring: str | None = None) -> tuple[QuadRing, CyclotomicInt]:
    """Read ``a+bi`` (Gaussian) or ``a+b*w`` (Eisenstein, ``w`` a cube root of unity)."""
    compact = re.sub(r"\s+", "", text)
    if m := _PURE.match(compact):
        sign, b_txt, unit = m.groups()
        a, b = 0, int(sign + (b_txt or "1"))
    elif m := _MIXED.match(compact):
        a_txt, sign, b_txt, unit = m.groups()
        a, b = int(a_txt), int(sign + (b_txt or "1")) if unit else 0
    else:
        raise UsageError(f"cannot read ideal generator {text!r}; expected a+bi or a+b*w")
    if unit:
        inferred = QuadRing.GAUSS if unit == "i" else QuadRing.EISENSTEIN
        if ring and QuadRing(ring) is not inferred:
            raise UsageError(f"generator {text!r} does not belong to the {ring} integers")
        qr = inferred
    elif ring:
        qr = QuadRing(ring)
    else:
        raise UsageError("a rational integer generator needs --ring gauss or --ring eisenstein")
    return qr, qr.element(a, b)


def cmd_gamma1(args) -> dict[str, Any]:
    if (args.level is None) == (args.ideal is None):
        raise UsageError("give exactly one of --level N or --ideal a+bi / a+b*w")
    rep = RepSpec(args.m, args.sym, int(args.det))
    if args.level is not None:
        value = chi_h_gamma1_z(args.m, args.level, rep)
        query = {"m": args.m, "level": args.level, "rep": _rep_label(rep)}
        provenance = [BROWN, "Gamma_1(m, N): phi(N) weights families [A1, 1], phi2(N) weights families [A2, I2]"]
    else:
        ring, gen = parse_ideal(args.ideal, args.ring)
        value = chi_h_gamma1_ring(ring, args.m, gen, rep)
        query = {"m": args.m, "ideal": str(gen), "ring": ring.value, "rep": _rep_label(rep)}
        provenance = [BROWN, "Gamma_1(m, a): phi_O(a) weights families [A0, 1]"]
    return {"command": "gamma1", "query": query, "result": fmt(value), "provenance": provenance}


def cmd_zeta(args) -> dict[str, Any]:
    key, _, raw = args.given.partition("=")
    key = key.strip().lower().replace("-", "_")
    if key not in ("chi_h", "zeta") or not raw:
        raise UsageError("--given must be chi_h=p/q or zeta=p/q")
    try:
        value = parse_rational(raw.strip())
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    fd = load_field_data(args.field)
    if key == "chi_h":
        result, solved = solve_identity(fd, chi_h=value), "zeta_minus_one"
    else:
        result, solved = solve_identity(fd, zeta=value), "chi_h"
    query = {"field": fd.name, "given": {key: fmt(value)}, "solve_for": solved}
    provenance = [
        "chi_h(SL_2(O_K)) = 2 zeta_K(-1) + torsion contribution",
        f"torsion contribution = {fmt(torsion_contribution(fd))}",
    ]
    return {"command": "zeta", "query": query, "result": fmt(result), "provenance": provenance}


# --- output --------------------------------------------------------------------------------


def render_text(record: dict[str, Any]) -> str:
    result = record["result"]
    if isinstance(result, list):
        headers = ["label", "representative", "order", "centralizer", "chi"]
        cells = [[str(r["label"]), json.dumps(r["representative"]), str(r["order"]), r["centralizer"], r["chi"]] for r in result]
        widths = [max(len(h), *(len(c[i]) for c in cells)) if cells else len(h) for i, h in enumerate(headers)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(headers, widths)).rstrip()]
        lines += ["  ".join(c.ljust(w) for c, w in zip(cell, widths)).rstrip() for cell in cells]
    else:
        lines = [result]
    lines += [f"# {note}" for note in record["provenance"]]
    return "\n".join(lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="eulerchar", description="Exact homological Euler characteristics of arithmetic groups.")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)

    def rep_flags(p):
        p.add_argument("--sym", type=int, default=0, help="symmetric power n of the standard representation")
        p.add_argument("--det", action="store_true", help="twist by the determinant")

    p = sub.add_parser("torsion", help="list torsion conjugacy classes")
    p.add_argument("--group", required=True, help="gl1z, gl2z or gl3z")
    common(p)
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("chi-h", help="chi_h(GL_m(O), S^n V (x) det^e)")
    p.add_argument("--group", required=True, help="glMz, glMgauss or glMeisenstein")
    rep_flags(p)
    common(p)
    p.set_defaults(func=cmd_chi_h)

    p = sub.add_parser("gamma1", help="chi_h of Gamma_1(m, N) or Gamma_1(m, a)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--level", type=int, help="integer level N coprime to 6")
    p.add_argument("--ideal", help="ideal generator a+bi or a+b*w")
    p.add_argument("--ring", choices=[r.value for r in QuadRing], help="ring for a rational integer --ideal")
    rep_flags(p)
    common(p)
    p.set_defaults(func=cmd_gamma1)

    p = sub.add_parser("zeta", help="solve chi_h(SL_2(O_K)) = 2 zeta_K(-1) + torsion terms")
    p.add_argument("field", help="field-data file, or a bundled name such as Q or Q_sqrt5")
    p.add_argument("--given", required=True, help="chi_h=p/q or zeta=p/q")
    common(p)
    p.set_defaults(func=cmd_zeta)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        record = args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"eulerchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except HypothesisViolation as exc:
        print(f"eulerchar: hypothesis violated: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except FieldDataError as exc:
        print(f"eulerchar: field data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"eulerchar: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if args.format == "json":
        print(json.dumps(record, indent=2, sort_keys=True))
    else:
        print(render_text(record))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
