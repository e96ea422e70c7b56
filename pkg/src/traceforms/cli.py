"""Command-line surface: group analysis, form computation, verification.

Arguments that carry structured data accept either a path to a JSON file
or inline JSON text.  `--json` switches the human-readable report to a
single machine-readable JSON object on stdout.

Exit codes: 0 success, 1 mathematical failure (a cross-check or suite
reported a wrong answer), 2 input error (malformed JSON, unsupported
descriptor, or a size cap exceeded).
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .corpus import corpus, corpus_entry, two_group_entries
from .errors import CapExceeded, ConsistencyError, InputError, TraceformsError
from .fields import Field, LaurentField, field_from_json
from .forms import (
    QForm,
    diagonalize,
    pfister,
    trace_form_from_poly,
    trace_form_kummer_tower,
    trace_form_multiquadratic,
    witt_decompose,
)
from .groups import (
    GroupTable,
    build_group,
    frattini_rank,
    is_lattice_modular,
    is_two_group,
)
from .groups.subgroups import all_subgroups
from .iwasawa import (
    classify_two_group,
    is_powerful,
    iwasawa_structures,
    max_iwasawa_level,
    strength,
)
from .oracle import FieldProfile, extension_obstruction, predict
from .suites import run_all, run_suite, suite_names

EXIT_OK = 0
EXIT_MATH = 1
EXIT_INPUT = 2


def _level_token(value):
    if value is None:
        return None
    return "inf" if value == math.inf else value


def _load_json(arg: str):
    """Accept a file path or inline JSON text."""
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        text = arg
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {arg!r}: {exc}") from exc


def _load_group(arg: str) -> GroupTable:
    """A corpus name, or a build spec as JSON (path or inline)."""
    try:
        entry = corpus_entry(arg)
    except TraceformsError:
        entry = None
    if entry is not None:
        return entry.group
    return build_group(_load_json(arg))


def _load_field(arg: str) -> Field:
    return field_from_json(_load_json(arg))


def _tower_monomials(field: Field) -> dict:
    names = {}
    cursor = field
    while isinstance(cursor, LaurentField):
        names[cursor.var] = field.coerce(cursor.x())
        cursor = cursor.sub
    return names


def _parse_element(field: Field, obj):
    """Element JSON, plus bare tower-variable names as a convenience."""
    if isinstance(obj, str):
        monomials = _tower_monomials(field)
        if obj in monomials:
            return monomials[obj]
    return field.element(field.element_from_json(obj))


def _parse_elements(field: Field, arg: str) -> list:
    data = _load_json(arg)
    if not isinstance(data, list):
        raise InputError("expected a JSON list of field elements")
    return [_parse_element(field, item) for item in data]


def _emit(args, payload: dict, lines: list[str]) -> None:
    if args.json:
        json.dump(payload, sys.stdout, indent=2)
        sys.stdout.write("\n")
    else:
        for line in lines:
            print(line)


def _witt_lines(wc) -> list[str]:
    aniso = (
        "none"
        if not wc.aniso_diag
        else "<" + ", ".join(str(e) for e in wc.aniso_diag) + ">"
    )
    return [
        f"dimension:        {wc.dim}",
        f"witt index:       {wc.witt_index}",
        f"anisotropic dim:  {wc.aniso_dim}",
        f"anisotropic part: {aniso}",
        f"hyperbolic:       {'yes' if wc.is_hyperbolic else 'no'}",
    ]


# -- group subcommands -------------------------------------------------------


def cmd_group_analyze(args) -> int:
    group = _load_group(args.spec)
    payload = {
        "name": group.name,
        "order": group.n,
        "abelian": group.is_abelian,
        "exponent": group.exponent,
        "two_group": is_two_group(group),
    }
    lines = [
        f"group:     {group.name or '(unnamed)'}",
        f"order:     {group.n}",
        f"abelian:   {'yes' if group.is_abelian else 'no'}",
        f"exponent:  {group.exponent}",
    ]
    if payload["two_group"]:
        structures = iwasawa_structures(group, min_level=1)
        level = max_iwasawa_level(group, structures)
        payload.update(
            {
                "frattini_rank": frattini_rank(group),
                "strength": _level_token(strength(group)),
                "powerful": is_powerful(group),
                "iwasawa_structures": len(structures),
                "max_iwasawa_level": _level_token(level),
            }
        )
        try:
            payload["subgroups"] = len(all_subgroups(group))
            payload["lattice_modular"] = is_lattice_modular(group)
        except CapExceeded as exc:
            payload["lattice_modular"] = None
            payload["lattice_note"] = str(exc)
        lines += [
            f"frattini rank:      {payload['frattini_rank']}",
            f"strength:           {payload['strength']}",
            f"powerful:           {'yes' if payload['powerful'] else 'no'}",
            f"iwasawa structures: {payload['iwasawa_structures']}"
            f" (max level {payload['max_iwasawa_level']})",
        ]
        if payload["lattice_modular"] is None:
            lines.append(f"lattice modular:    skipped ({payload['lattice_note']})")
        else:
            lines.append(
                "lattice modular:    "
                + ("yes" if payload["lattice_modular"] else "no")
                + f" ({payload['subgroups']} subgroups)"
            )
    else:
        lines.append("not a 2-group: structure analysis applies to its Sylow 2-subgroup")
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_group_classify(args) -> int:
    group = _load_group(args.spec)
    report = classify_two_group(group, args.m)
    lines = [
        f"group:               {report.group_name or '(unnamed)'} (order {report.order})",
        f"m:                   {report.m}",
        f"abelian:             {'yes' if report.is_abelian else 'no'}",
        f"strength:            {_level_token(report.strength)}",
        f"subgroup condition:  {report.subgroup_condition}",
        f"structure condition: {report.structure_condition}",
        f"structures found:    {report.structure_count}"
        f" (max level {_level_token(report.max_level)})",
    ]
    if report.subgroup_witness is not None:
        lines.append(
            f"failing subgroup:    order {report.subgroup_witness.order}"
        )
    _emit(args, report.to_json(), lines)
    return EXIT_OK


def cmd_group_corpus_check(args) -> int:
    ms = args.m or [2, 3, 4, 5]
    results = []
    disagreements = 0
    for entry in two_group_entries():
        if entry.order > args.max_order:
            continue
        per_group = {"group": entry.name, "order": entry.order, "m": {}}
        for m in ms:
            report = classify_two_group(entry.group, m)
            agree = report.subgroup_condition == report.structure_condition
            per_group["m"][str(m)] = {
                "answer": report.subgroup_condition,
                "agree": agree,
            }
            if not agree:
                disagreements += 1
        results.append(per_group)
    payload = {
        "groups": len(results),
        "m_values": ms,
        "disagreements": disagreements,
        "results": results,
    }
    lines = [
        f"checked {len(results)} two-groups at m in {ms}: "
        + (f"{disagreements} disagreements" if disagreements else "all routes agree")
    ]
    if args.verbose:
        for row in results:
            answers = ", ".join(
                f"m={m}:{'B' if v['answer'] else 'H'}" for m, v in row["m"].items()
            )
            lines.append(f"  {row['group']} (order {row['order']}): {answers}")
    _emit(args, payload, lines)
    return EXIT_OK if disagreements == 0 else EXIT_MATH


# -- form subcommands --------------------------------------------------------


def cmd_form_classify(args) -> int:
    data = _load_json(args.form)
    if not isinstance(data, dict) or "field" not in data or "entries" not in data:
        raise InputError("form JSON needs 'field' and 'entries' keys")
    fld = field_from_json(data["field"])
    form = QForm(fld, [_parse_element(fld, x) for x in data["entries"]])
    wc = witt_decompose(form)
    _emit(args, wc.to_json(), _witt_lines(wc))
    return EXIT_OK


def cmd_form_trace_poly(args) -> int:
    fld = _load_field(args.field)
    coeffs = _parse_elements(fld, args.coeffs)
    gram = trace_form_from_poly(fld, coeffs)
    diag, _ = diagonalize(gram)
    form = QForm(fld, diag)
    wc = witt_decompose(form)
    payload = {
        "gram": gram.to_json(),
        "diagonal": form.to_json(),
        "witt": wc.to_json(),
    }
    lines = ["gram matrix:"]
    lines += ["  [" + ", ".join(str(x) for x in row) + "]" for row in gram.rows]
    lines.append("diagonal: <" + ", ".join(str(e) for e in form.entries) + ">")
    lines += _witt_lines(wc)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_form_trace_multiquad(args) -> int:
    fld = _load_field(args.field)
    gens = _parse_elements(fld, args.generators)
    form = trace_form_multiquadratic(fld, gens)
    wc = witt_decompose(form)
    payload = {"diagonal": form.to_json(), "witt": wc.to_json()}
    lines = ["diagonal: <" + ", ".join(str(e) for e in form.entries) + ">"]
    lines += _witt_lines(wc)
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_form_trace_kummer(args) -> int:
    fld = _load_field(args.field)
    a = _parse_element(fld, _load_json(args.a))
    report = trace_form_kummer_tower(fld, args.n, a)
    lines = [
        f"power algebra: degree {report.gram.dim} = 2^{args.n}, a = {report.a}",
        f"pfister slot zeta_(2^{args.n - 2}): {report.zeta}",
        f"matches scaled Pfister template: {report.matches_predicted}",
        f"fixed-subalgebra descent consistent: "
        f"{report.fixed_algebra.get('matches_multiquadratic')}",
    ]
    lines += _witt_lines(report.witt)
    _emit(args, report.to_json(), lines)
    return EXIT_OK


def cmd_form_pfister(args) -> int:
    fld = _load_field(args.field)
    slots = _parse_elements(fld, args.slots)
    form = pfister(fld, slots, convention=args.convention)
    if args.scale is not None:
        form = form.scale(_parse_element(fld, _load_json(args.scale)))
    wc = witt_decompose(form)
    payload = {"form": form.to_json(), "witt": wc.to_json()}
    lines = ["diagonal: <" + ", ".join(str(e) for e in form.entries) + ">"]
    lines += _witt_lines(wc)
    _emit(args, payload, lines)
    return EXIT_OK


# -- predictor / obstruction ---------------------------------------------------


def cmd_predict(args) -> int:
    group = _load_group(args.group)
    profile = FieldProfile.from_json(_load_json(args.profile))
    pred = predict(
        group, profile, declared_simple=args.declared_simple, seed=args.seed
    )
    payload = pred.to_json()
    lines = [
        f"sylow 2-subgroup: order {pred.sylow_order}, "
        + ("abelian" if pred.sylow_abelian else "non-abelian"),
        f"hyperbolic forced: {'yes' if pred.hyperbolic_forced else 'no'}"
        + (f" (rule: {pred.rule})" if pred.rule != "none" else ""),
    ]
    if pred.shape is not None:
        lines.append(
            f"expected shape: <{pred.shape['scale']}> x "
            f"(a {pred.shape['pfister_rank']}-fold Pfister form)"
        )
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_obstruction(args) -> int:
    fld = _load_field(args.field)
    slots = _parse_elements(fld, args.slots)
    group = _load_group(args.group)
    result = extension_obstruction(fld, slots, group, convention=args.convention)
    lines = [
        f"pfister form on {len(slots)} slots: "
        + ("hyperbolic" if result["pfister_hyperbolic"] else "not hyperbolic"),
        f"verdict: {result['verdict']}",
    ]
    _emit(args, result, lines)
    return EXIT_OK


# -- corpus / verify -----------------------------------------------------------


def cmd_corpus(args) -> int:
    rows = [
        {
            "name": e.name,
            "order": e.order,
            "two_group": e.is_two_group,
            "spec": e.spec,
        }
        for e in corpus()
    ]
    payload = {"entries": rows}
    lines = [
        f"{row['name']}: order {row['order']}"
        + ("" if row["two_group"] else " (not a 2-group)")
        for row in rows
    ]
    _emit(args, payload, lines)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.suite == "all":
        results = run_all(seed=args.seed)
    else:
        results = [run_suite(args.suite, seed=args.seed)]
    payload = {"results": [r.to_json() for r in results]}
    lines = []
    for r in results:
        lines.append(r.summary())
        for f in r.failures[:10]:
            lines.append(f"    {f.case}: expected {f.expected}, got {f.got}")
    ok = all(r.ok for r in results)
    lines.append("VERIFY: " + ("ok" if ok else "FAILED"))
    _emit(args, payload, lines)
    return EXIT_OK if ok else EXIT_MATH


# -- parser --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="traceforms",
        description="Exact trace-form and 2-group structure computations.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks")

    sub = parser.add_subparsers(dest="command", required=True)

    group_p = sub.add_parser("group", help="finite-group analysis")
    gsub = group_p.add_subparsers(dest="subcommand", required=True)

    p = gsub.add_parser("analyze", parents=[common], help="structure overview")
    p.add_argument("spec", help="corpus name, JSON file, or inline JSON build spec")
    p.set_defaults(handler=cmd_group_analyze)

    p = gsub.add_parser(
        "classify", parents=[common], help="dual-route 2-group classification"
    )
    p.add_argument("spec", help="corpus name, JSON file, or inline JSON build spec")
    p.add_argument("-m", type=int, required=True, help="power parameter (>= 2)")
    p.set_defaults(handler=cmd_group_classify)

    p = gsub.add_parser(
        "corpus-check", parents=[common], help="route agreement over the corpus"
    )
    p.add_argument("--max-order", type=int, default=256)
    p.add_argument("--m", type=int, action="append", help="repeatable; default 2..5")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(handler=cmd_group_corpus_check)

    form_p = sub.add_parser("form", help="quadratic / trace form computations")
    fsub = form_p.add_subparsers(dest="subcommand", required=True)

    p = fsub.add_parser("classify", parents=[common], help="Witt class of a form")
    p.add_argument("form", help="JSON with 'field' and 'entries'")
    p.set_defaults(handler=cmd_form_classify)

    p = fsub.add_parser("trace-poly", parents=[common], help="trace form of K[x]/(f)")
    p.add_argument("field", help="field JSON")
    p.add_argument("coeffs", help="monic poly coefficients, constant first")
    p.set_defaults(handler=cmd_form_trace_poly)

    p = fsub.add_parser(
        "trace-multiquad", parents=[common], help="multiquadratic trace form"
    )
    p.add_argument("field", help="field JSON")
    p.add_argument("generators", help="JSON list of square-class generators")
    p.set_defaults(handler=cmd_form_trace_multiquad)

    p = fsub.add_parser(
        "trace-kummer", parents=[common], help="2-power root tower trace form"
    )
    p.add_argument("field", help="field JSON")
    p.add_argument("n", type=int, help="tower exponent: degree 2^n")
    p.add_argument("a", help="radicand element JSON")
    p.set_defaults(handler=cmd_form_trace_kummer)

    p = fsub.add_parser("pfister", parents=[common], help="Pfister form classifier")
    p.add_argument("field", help="field JSON")
    p.add_argument("slots", help="JSON list of slot elements")
    p.add_argument("--convention", choices=["minus", "plus"], default="minus")
    p.add_argument("--scale", help="optional scale element JSON")
    p.set_defaults(handler=cmd_form_pfister)

    p = sub.add_parser(
        "predict", parents=[common], help="forced-hyperbolicity prediction"
    )
    p.add_argument("group", help="corpus name, JSON file, or inline JSON build spec")
    p.add_argument("profile", help="field profile JSON")
    p.add_argument("--declared-simple", action="store_true")
    p.set_defaults(handler=cmd_predict)

    p = sub.add_parser(
        "obstruction", parents=[common], help="embedding-problem Pfister obstruction"
    )
    p.add_argument("field", help="field JSON")
    p.add_argument("slots", help="JSON list of slot elements")
    p.add_argument("group", help="corpus name, JSON file, or inline JSON build spec")
    p.add_argument("--convention", choices=["minus", "plus"], default="plus")
    p.set_defaults(handler=cmd_obstruction)

    p = sub.add_parser("corpus", parents=[common], help="list the fixture corpus")
    p.set_defaults(handler=cmd_corpus)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument(
        "--suite",
        required=True,
        help="suite name or 'all'; available: " + ", ".join(suite_names()),
    )
    p.set_defaults(handler=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except (InputError, CapExceeded) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ConsistencyError as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_MATH
    except TraceformsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MATH


if __name__ == "__main__":
    sys.exit(main())
