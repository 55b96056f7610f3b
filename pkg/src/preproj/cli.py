"""Command-line interface: ``preproj <subcommand> ...``.

Exit codes: 0 success, 1 computation-domain error, 2 invalid input.
Enumerations are printed as JSON Lines; everything else as one JSON document.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import re
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable

from . import formats
from .classification import exists_simple, p_value
from .formats import ValidationError
from .induction import check_extension_conditions, verify_relation_I_with_zero_arrows
from .khare import CasimirPolynomial, enumerate_Vrs
from .oracle import oracle_exists_simple, solve_chain
from .quiver import DimVector, _vkey, build_quiver, cartan_matrix, delta_prefix, window_vertices
from .reflection import in_lambda_i, reflect, reflect_word
from .reps import check_wreath, is_isomorphic
from .roots import dominate, enumerate_positive_roots
from .scalars import format_scalar, scalar_to_json, to_scalar

log = logging.getLogger("preproj")


def _setup_logging():
    level = os.environ.get("PREPROJ_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING), stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")


# -- argument parsing helpers ------------------------------------------------------


def _quiver(text: str):
    if text.endswith(".json"):
        return formats.quiver_from_json(_load_json(text))
    if text.startswith("{"):
        return formats.quiver_from_json(_parse_json(text))
    return formats.quiver_from_json(text)


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON: {exc}") from exc


def _load_json(path: str):
    try:
        with (sys.stdin if path == "-" else open(path)) as fh:
            return json.load(fh)
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON in {path}: {exc}") from exc


def _weight(text: str | None):
    if text is None:
        return None
    if text.endswith(".json"):
        return formats.weight_from_json(_load_json(text))
    return formats.parse_weight(text)


def _window(q, text: str):
    try:
        return window_vertices(q, text)
    except ValueError as exc:
        raise ValidationError(str(exc)) from exc


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x]
    except ValueError as exc:
        raise ValidationError(f"expected comma-separated integers, got {text!r}") from exc


def _scalar(text: str):
    try:
        return to_scalar(text)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad scalar {text!r}") from exc


def _interval(text: str) -> tuple[int, int]:
    if ".." not in text:
        raise ValidationError("interval must look like s..r")
    s, r = text.split("..")
    try:
        return int(s), int(r)
    except ValueError as exc:
        raise ValidationError(f"bad interval {text!r}") from exc


def _alpha(text: str) -> DimVector:
    data = _parse_json(text)
    if isinstance(data, list):
        return DimVector(dict(enumerate(data)))
    if isinstance(data, dict):
        return DimVector({formats._vertex(k): v for k, v in data.items()})
    raise ValidationError("alpha must be a JSON list or object")


def _dim_json(alpha) -> dict:
    return {str(k): alpha[k] for k in sorted(alpha, key=_vkey)}


# -- output ------------------------------------------------------------------------


class Out:
    def __init__(self, fmt: str, stream=None):
        self.fmt = fmt
        self.stream = stream or sys.stdout

    def doc(self, obj):
        if self.fmt == "json":
            print(json.dumps(obj, sort_keys=True), file=self.stream)
        else:
            for line in _table_lines(obj):
                print(line, file=self.stream)

    def lines(self, objs: Iterable[dict]):
        objs = list(objs)
        if self.fmt == "json":
            for o in objs:
                print(json.dumps(o, sort_keys=True), file=self.stream)
        else:
            if not objs:
                print("(none)", file=self.stream)
                return
            keys = list(objs[0])
            rows = [[_cell(o.get(k)) for k in keys] for o in objs]
            widths = [max(len(k), *(len(r[j]) for r in rows)) for j, k in enumerate(keys)]
            print("  ".join(k.ljust(w) for k, w in zip(keys, widths)), file=self.stream)
            for r in rows:
                print("  ".join(c.ljust(w) for c, w in zip(r, widths)), file=self.stream)


def _cell(v) -> str:
    if isinstance(v, list) and len(v) == 4 and all(isinstance(x, int) for x in v):
        return format_scalar(to_scalar(v))
    if isinstance(v, (dict, list)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _table_lines(obj, indent=""):
    if isinstance(obj, dict):
        for k in obj:
            v = obj[k]
            if isinstance(v, dict) and v:
                yield f"{indent}{k}:"
                yield from _table_lines(v, indent + "  ")
            else:
                yield f"{indent}{k}: {_cell(v)}"
    else:
        yield indent + _cell(obj)


def _weight_window(lam, window) -> dict:
    return {str(v): scalar_to_json(lam[v]) for v in window}


# -- subcommands ---------------------------------------------------------------------


def cmd_quiver(args, out: Out):
    q = _quiver(args.quiver)
    doc = {"quiver": formats.quiver_to_json(q)}
    if args.window:
        window = _window(q, args.window)
        doc["window"] = window
        doc["cartan"] = cartan_matrix(q, window)
        doc["arrows"] = [a.label for a in q.arrows_within(window)]
    if args.delta:
        doc["delta"] = delta_prefix(q, args.delta)
    out.doc(doc)


def _root_entry(job):
    q, alpha = job
    return {"alpha": _dim_json(alpha), "height": alpha.total(), "p": p_value(q, alpha)}


def _pool_map(fn, jobs, n):
    if n and n > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=n) as ex:
            return list(ex.map(fn, jobs))
    return [fn(j) for j in jobs]


def cmd_roots(args, out: Out):
    q = _quiver(args.quiver)
    window = _window(q, args.window)
    roots = enumerate_positive_roots(q, window)
    out.lines(_pool_map(_root_entry, [(q, a) for a in roots], args.jobs))


def cmd_dominate(args, out: Out):
    q = _quiver(args.quiver)
    lam = _weight(args.weight)
    window = _window(q, args.window)
    plus, word = dominate(q, lam, window)
    shown = sorted(set(window) | {w for v in window for w in q.neighbors(v)}, key=_vkey)
    out.doc({"word": word, "input": _weight_window(lam, shown), "dominant": _weight_window(plus, shown), "weight": plus.to_json()})


def _classify_entry(job):
    q, lam, alpha = job
    return exists_simple(q, lam, alpha).to_json()


def cmd_classify(args, out: Out):
    q = _quiver(args.quiver)
    lam = _weight(args.weight)
    if args.alpha:
        out.lines([exists_simple(q, lam, _alpha(args.alpha)).to_json()])
        return
    window = _window(q, args.window)
    roots = enumerate_positive_roots(q, window)
    certs = _pool_map(_classify_entry, [(q, lam, a) for a in roots], args.jobs)
    if not args.all:
        certs = [c for c in certs if c["exists"]]
    out.lines(certs)


def cmd_oracle(args, out: Out):
    q = _quiver(args.quiver)
    lam = _weight(args.weight)
    if args.interval:
        s, r = _interval(args.interval)
        sol = solve_chain(q, lam, s, r)
        doc = {"interval": [s, r], "exists": sol is not None}
        if sol is not None:
            doc["edge_scalars"] = {str(k): scalar_to_json(u) for k, u in sorted(sol.u.items())}
            doc["module"] = formats.rep_to_json(sol.rep)
        out.doc(doc)
        return
    if not args.alpha:
        raise ValidationError("give --interval or --alpha")
    res = oracle_exists_simple(q, lam, _alpha(args.alpha))
    doc = {"exists": res.exists, "edge_scalars": {a.label: scalar_to_json(u) for a, u in sorted(res.edge_scalars.items(), key=lambda kv: kv[0].label)}}
    if res.rep is not None:
        doc["module"] = formats.rep_to_json(res.rep)
    out.doc(doc)


def cmd_khare(args, out: Out):
    try:
        f = CasimirPolynomial.parse(args.f, constant=args.constant)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise ValidationError(f"bad polynomial {args.f!r}: {exc}") from exc
    if args.rmax < 0:
        raise ValidationError("--rmax must be nonnegative")
    if f.has_constant_term:
        log.warning("f has a constant term; results go beyond the constant-free convention")
    out.lines({"s": m.s, "r": m.r, "dimension": m.dimension} for m in enumerate_Vrs(f, args.rmax))


def _module_params(args, data_lam, data_nu):
    lam = _weight(args.weight) if args.weight else data_lam
    nu = _scalar(args.nu) if args.nu is not None else data_nu
    if lam is None:
        raise ValidationError("no weight given (use --weight or a 'weight' field)")
    return lam, (nu if nu is not None else to_scalar(0))


def cmd_check_rep(args, out: Out):
    V, dl, dn = formats.wreath_from_json(_load_json(args.module))
    lam, nu = _module_params(args, dl, dn)
    report = check_wreath(V, lam, nu)
    out.doc({"pass": report.passed, "n": V.n, "total_dim": V.total_dim(), "violations": [
        {"relation": v.relation, "location": {k: (list(x) if isinstance(x, tuple) else x) for k, x in v.location.items()}}
        for v in report.violations
    ]})


def cmd_reflect(args, out: Out):
    V, dl, dn = formats.wreath_from_json(_load_json(args.module))
    lam, nu = _module_params(args, dl, dn)
    if args.word is not None:
        word = _int_list(args.word)
    elif args.vertex is not None:
        word = [args.vertex]
    else:
        raise ValidationError("give --vertex or --word")
    for j in word:
        if not V.quiver.has_vertex(j):
            raise ValidationError(f"{j!r} is not a vertex")
    W, lam2 = reflect_word(V, word, lam, nu)
    report = check_wreath(W, lam2, nu)
    doc = {"module": formats.wreath_to_json(W, lam2, nu), "check": {"pass": report.passed}}
    if args.verify_involution:
        if len(word) != 1:
            raise ValidationError("--verify-involution needs a single --vertex")
        i = word[0]
        back, _ = reflect(W, i, lam2, nu)
        iso = is_isomorphic(V, back, seed=args.seed)
        doc["involution"] = {"in_lambda_i": in_lambda_i(lam, nu, i, V.n), "isomorphic": iso.isomorphic}
    if args.output:
        with open(args.output, "w") as fh:
            json.dump(doc["module"], fh, sort_keys=True)
            fh.write("\n")
    out.doc(doc)


def cmd_induce_check(args, out: Out):
    q = _quiver(args.quiver)
    parts = _int_list(args.partition)
    diagrams = [_int_list(d) for d in args.diagrams.split(";")]
    lam = _weight(args.weight)
    nu = _scalar(args.nu)
    vertices = None if args.roots else _int_list(args.vertices)
    try:
        if args.roots:
            roots = [_alpha(r) for r in args.roots.split(";")]
            verdict = check_extension_conditions(q, parts, diagrams, lam, nu, roots=roots)
        else:
            verdict = check_extension_conditions(q, parts, diagrams, lam, nu, vertices=vertices)
    except ValueError as exc:
        if isinstance(exc, ValidationError):
            raise
        raise ValidationError(str(exc)) from exc
    if args.verify:
        if vertices is None:
            raise ValidationError("--verify needs --vertices")
        # size limits surface here as computation-domain errors
        verdict.relation_check = verify_relation_I_with_zero_arrows(q, parts, diagrams, vertices, lam, nu)
    out.doc(verdict.to_json())


# -- parser --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "table"), default="json")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized searches")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for enumerations")

    p = argparse.ArgumentParser(prog="preproj", description="Exact computations with deformed preprojective algebras of A_inf, A_plus_inf and D_inf.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, parents=[common], help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("quiver", cmd_quiver, "quiver data, Cartan block and delta")
    sp.add_argument("--quiver", default="A_plus_inf")
    sp.add_argument("--window")
    sp.add_argument("--delta", type=int)

    sp = add("roots", cmd_roots, "positive roots of a finite window")
    sp.add_argument("--quiver", default="A_plus_inf")
    sp.add_argument("--window", required=True)

    sp = add("dominate", cmd_dominate, "reduce a weight to a window-dominant one")
    sp.add_argument("--quiver", default="A_plus_inf")
    sp.add_argument("--weight", required=True)
    sp.add_argument("--window", required=True)

    sp = add("classify", cmd_classify, "simple modules supported in a window")
    sp.add_argument("--quiver", default="A_plus_inf")
    sp.add_argument("--weight", required=True)
    sp.add_argument("--window", default="0..3")
    sp.add_argument("--alpha", help="single dimension vector, JSON list or object")
    sp.add_argument("--all", action="store_true", help="also print negative certificates")

    sp = add("oracle", cmd_oracle, "constructive check for multiplicity-free roots")
    sp.add_argument("--quiver", default="A_plus_inf")
    sp.add_argument("--weight", required=True)
    sp.add_argument("--interval")
    sp.add_argument("--alpha")

    sp = add("khare", cmd_khare, "modules V(r,s) for a Casimir polynomial")
    sp.add_argument("--f", default="0", help="coefficients of Delta, Delta^2, ... in f (no constant term)")
    sp.add_argument("--constant", default="0", help="constant term of f (default 0)")
    sp.add_argument("--rmax", type=int, default=20)

    sp = add("reflect", cmd_reflect, "apply reflection functors to a module file")
    sp.add_argument("--module", required=True)
    sp.add_argument("--vertex", type=int)
    sp.add_argument("--word", help="comma-separated vertices, rightmost applied first")
    sp.add_argument("--weight")
    sp.add_argument("--nu")
    sp.add_argument("--output", help="also write the reflected module here")
    sp.add_argument("--verify-involution", action="store_true")

    sp = add("check-rep", cmd_check_rep, "check the defining relations on a module file")
    sp.add_argument("--module", required=True)
    sp.add_argument("--weight")
    sp.add_argument("--nu")

    sp = add("induce-check", cmd_induce_check, "extension conditions for an induced module")
    sp.add_argument("--quiver", default="A_plus_inf")
    sp.add_argument("--partition", required=True)
    sp.add_argument("--diagrams", required=True, help='row lengths per part, e.g. "2;1" or "2,2;1"')
    sp.add_argument("--vertices")
    sp.add_argument("--roots", help='dimension vectors per part, e.g. "[1,1];[0,0,1]"')
    sp.add_argument("--weight", required=True)
    sp.add_argument("--nu", required=True)
    sp.add_argument("--verify", action="store_true", help="also check the zero-arrow module directly")
    return p


_NEGATIVE_VALUE = re.compile(r"^-[\d.]")


def _glue_negative_values(argv: list[str]) -> list[str]:
    # argparse takes "-4,0" for an option; bind it to the flag before it
    out: list[str] = []
    i = 0
    while i < len(argv):
        a = argv[i]
        if a.startswith("--") and "=" not in a and i + 1 < len(argv) and _NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(f"{a}={argv[i + 1]}")
            i += 2
            continue
        out.append(a)
        i += 1
    return out


def run(argv=None, stream=None) -> int:
    _setup_logging()
    parser = build_parser()
    argv = _glue_negative_values(list(sys.argv[1:] if argv is None else argv))
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "induce-check" and not (args.vertices or args.roots):
        print("error: give --vertices or --roots", file=sys.stderr)
        return 2
    out = Out(args.format, stream)
    try:
        code = args.func(args, out)
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return code or 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
