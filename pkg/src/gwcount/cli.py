"""Command-line front end with JSON input and output.

Every command prints one JSON document.  Input documents come from
``--input``, which is either inline JSON or a path to a JSON file.  Exit
codes: 0 on success, 2 for input contract violations, 3 for internal
invariant failures; errors print ``{"error": code, "message": text}``.

Examples
========

>>> main(["series", "yz", "--e", "24", "--eps", "0", "--kappa", "1", "--order", "2"])  # doctest: +ELLIPSIS
{"e": 24, "eps": 0, "kappa": 1, "order": 2, "rank": [1, 24, 324], ...}
0
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .charsums import SUPPORTED_D, gauss_table
from .elliptick3 import WeierstrassFamily, k3_report
from .errors import GWCountError, InputError, InvalidInput
from .exactalg import NumberField, format_fraction
from .gwring import (
    DiagonalForm, GWClass, gw_from_diagonal, gw_over_field_from_diagonal,
    hyperbolic, reduce_mod_delta_g, trace_transfer, trace_transfer_closed_form,
)
from .gwseries import (
    DEFAULT_ORDER, AugChar, det_series, real_goettsche_series, yz5_coefficient, yz_full_series,
    yz_real_series, yz_rank_series,
)
from .localfactors import (
    LinearSystemData, NodeData, RationalCurveData, b_mot_report, phi_p, welschinger_curve,
)


# --------------------------------------------------------------- JSON parsing

def load_input(source: str | None):
    """Parse ``--input``: inline JSON, or a path to a JSON file."""
    if source is None:
        raise InvalidInput("this command needs --input")
    text = source
    if not source.lstrip().startswith(("{", "[")) and os.path.exists(source):
        with open(source, encoding="utf-8") as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidInput(f"malformed JSON input: {exc.msg}") from None


def _field(coeffs) -> NumberField:
    return NumberField([int(c) for c in coeffs])


def _get(obj, key):
    if not isinstance(obj, dict) or key not in obj:
        raise InvalidInput(f"missing key {key!r}")
    return obj[key]


def parse_node(base: NumberField, obj) -> NodeData:
    return NodeData(base, _get(obj, "rel_poly"), _get(obj, "alpha"))


def parse_curve(obj) -> RationalCurveData:
    L = _field(_get(obj, "residue_field"))
    return RationalCurveData(L, [parse_node(L, n) for n in obj.get("nodes", [])])


def parse_system(obj) -> LinearSystemData:
    genus = _get(obj, "genus")
    if not isinstance(genus, int):
        raise InvalidInput("genus must be an integer")
    return LinearSystemData(genus, [parse_curve(c) for c in _get(obj, "curves")])


def parse_gw(obj) -> GWClass:
    """A GW expression.

    Leaves: ``{"rank", "sign", "disc"}``, ``{"diagonal": [..]}`` or
    ``{"hyperbolic": n}``; nodes: ``{"add" | "sub" | "mul": [expr, ...]}``
    and ``{"neg": expr}``.
    """
    if not isinstance(obj, dict):
        raise InvalidInput("GW expression must be a JSON object")
    if "rank" in obj:
        return GWClass.from_json(obj)
    if "diagonal" in obj:
        return gw_from_diagonal(obj["diagonal"])
    if "hyperbolic" in obj:
        return hyperbolic(int(obj["hyperbolic"]))
    if "neg" in obj:
        return -parse_gw(obj["neg"])
    for op in ("add", "sub", "mul"):
        if op in obj:
            args = [parse_gw(a) for a in obj[op]]
            if not args:
                raise InvalidInput(f"{op!r} needs at least one argument")
            out = args[0]
            for a in args[1:]:
                out = out + a if op == "add" else out - a if op == "sub" else out * a
            return out
    raise InvalidInput("unrecognized GW expression")


# ------------------------------------------------------------------ commands

def cmd_series_yz(args):
    s = yz_full_series(args.e, args.eps, args.kappa, args.order)
    out = s.to_json()
    out["yz5"] = [yz5_coefficient(g, s.aug).to_json() for g in range(args.order + 1)]
    return out


def cmd_series_goettsche_real(args):
    a = args.eps
    if (args.e - abs(a)) % 2 or abs(a) > args.e:
        raise InvalidInput("need |eps| <= e with e - eps even")
    b = (args.e - abs(a)) // 2
    out = {"e": args.e, "a": a, "b": b, "order": args.order,
           "goettsche": real_goettsche_series(a, b, args.order),
           "rank": yz_rank_series(args.e, args.order)}
    if a % 2 == 0:
        out["yz_real"] = yz_real_series(a, args.e, args.order)
    return out


def cmd_series_det(args):
    s = det_series(AugChar(args.kappa, -args.e), args.e, args.order)
    return {"e": args.e, "kappa": int(args.kappa), **s.to_json()}


def cmd_gw_eval(args):
    obj = load_input(args.input)
    expr = obj.get("expr", obj) if isinstance(obj, dict) else obj
    x = parse_gw(expr)
    out = {"class": x.to_json()}
    g = obj.get("g") if isinstance(obj, dict) else None
    if g is not None:
        out["mod_delta_g"] = reduce_mod_delta_g(x, int(g)).to_json()
    return out


def cmd_transfer_trace(args):
    obj = load_input(args.input)
    L = _field(_get(obj, "field"))
    q = DiagonalForm(L, [L(c) for c in _get(obj, "form")])
    gram = trace_transfer(L, q)
    closed = trace_transfer_closed_form(L, gw_over_field_from_diagonal(q))
    return {"gram": gram.to_json(), "closed_form": closed.to_json(), "agree": gram == closed}


def cmd_phi(args):
    obj = load_input(args.input)
    L = _field(_get(obj, "base"))
    node = parse_node(L, obj)
    return {"phi": phi_p(node).to_json(),
            "relative_norm": [format_fraction(a) for a in node.relative_norm().coords]}


def cmd_bmot(args):
    return b_mot_report(parse_system(load_input(args.input))).to_json()


def cmd_welschinger(args):
    system = parse_system(load_input(args.input))
    per_curve = [[welschinger_curve(c, i) for i in range(c.residue_field.real_embedding_count)]
                 for c in system.curves]
    return {"genus": system.genus, "per_curve": per_curve,
            "welschinger": sum(sum(w) for w in per_curve)}


def cmd_gauss_table(args):
    ds = args.d if args.d else list(SUPPORTED_D)
    return gauss_table(args.qmax, ds)


def cmd_k3_classify(args):
    obj = load_input(args.input)
    try:
        fam = WeierstrassFamily.from_json(obj)
    except (KeyError, TypeError):
        raise InvalidInput("family JSON needs 'alpha1' and a three-element 'beta'") from None
    return k3_report(fam)


# --------------------------------------------------------------------- parser

def _d_list(text):
    try:
        ds = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError("--d takes a comma separated list of integers") from None
    bad = [d for d in ds if d not in SUPPORTED_D]
    if bad:
        raise argparse.ArgumentTypeError(f"unsupported d {bad}; choose from {list(SUPPORTED_D)}")
    return ds


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", help="write JSON here instead of stdout")

    series_opts = argparse.ArgumentParser(add_help=False)
    series_opts.add_argument("--order", type=int, default=DEFAULT_ORDER)
    series_opts.add_argument("--e", type=int, default=24, help="Euler characteristic e(X)")
    series_opts.add_argument("--eps", type=int, default=0, help="signature eps(X)")
    series_opts.add_argument("--kappa", type=int, default=1, help="square class of det(X)")

    inp = argparse.ArgumentParser(add_help=False)
    inp.add_argument("--input", help="inline JSON or path to a JSON file")

    p = argparse.ArgumentParser(prog="gwcount", description=__doc__.split("\n")[0])
    sub = p.add_subparsers(dest="group", required=True)

    series = sub.add_parser("series").add_subparsers(dest="cmd", required=True)
    series.add_parser("yz", parents=[common, series_opts]).set_defaults(fn=cmd_series_yz)
    series.add_parser("goettsche-real", parents=[common, series_opts]).set_defaults(
        fn=cmd_series_goettsche_real)
    series.add_parser("det", parents=[common, series_opts]).set_defaults(fn=cmd_series_det)

    gw = sub.add_parser("gw").add_subparsers(dest="cmd", required=True)
    gw.add_parser("eval", parents=[common, inp]).set_defaults(fn=cmd_gw_eval)

    tr = sub.add_parser("transfer").add_subparsers(dest="cmd", required=True)
    tr.add_parser("trace", parents=[common, inp]).set_defaults(fn=cmd_transfer_trace)

    sub.add_parser("phi", parents=[common, inp]).set_defaults(fn=cmd_phi)
    sub.add_parser("bmot", parents=[common, inp]).set_defaults(fn=cmd_bmot)
    sub.add_parser("welschinger", parents=[common, inp]).set_defaults(fn=cmd_welschinger)

    gauss = sub.add_parser("gauss").add_subparsers(dest="cmd", required=True)
    gt = gauss.add_parser("table", parents=[common])
    gt.add_argument("--qmax", type=int, default=50)
    gt.add_argument("--d", type=_d_list, default=None, help="comma separated orders, e.g. 1,3,4")
    gt.set_defaults(fn=cmd_gauss_table)

    k3 = sub.add_parser("k3").add_subparsers(dest="cmd", required=True)
    k3.add_parser("classify", parents=[common, inp]).set_defaults(fn=cmd_k3_classify)
    return p


def _emit(obj, path):
    text = json.dumps(obj)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if getattr(args, "order", 0) < 0:
            raise InvalidInput("order must be non-negative")
        result = args.fn(args)
    except GWCountError as exc:
        print(json.dumps({"error": exc.code, "message": str(exc)}))
        return 2 if isinstance(exc, InputError) else 3
    _emit(result, args.output)
    return 0


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
