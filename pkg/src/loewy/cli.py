"""Command-line interface.

Every subcommand prints one JSON report on stdout (``--human`` switches to
an indented key/value rendering), except ``instance`` and ``enumerate``
which emit lattice documents in the text format.

Exit codes: 0 ok, 2 parse error, 3 validation error, 4 law violation,
5 cap or size limit reached.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import enumeration, instances, laws, procedural, properties, series
from .core import LatticeError, SizeLimit, longest_chain_length
from .textformat import DocumentError, format_document, from_lattice, parse_many, to_lattice

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_LAW, EXIT_LIMIT = 0, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code: str, message: str, exit_code: int, **extra):
        self.code, self.message, self.exit_code, self.extra = code, message, exit_code, extra
        super().__init__(message)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise CliError("io", str(exc), EXIT_PARSE) from exc


def _load(path: str):
    try:
        docs = parse_many(_read(path))
        return [(doc, to_lattice(doc)) for doc in docs]
    except DocumentError as exc:
        raise CliError(exc.code, exc.message, exc.exit_code, line=exc.line, col=exc.col) from exc


def _one_or_many(reports: list[dict]) -> dict:
    return reports[0] if len(reports) == 1 else {"documents": reports}


def _labels(L, xs):
    return None if xs is None else [L.labels[x] for x in xs]


# subcommands


def cmd_validate(args):
    reports = []
    for doc, L in _load(args.file):
        reports.append({"lattice": doc.name, "status": "ok", "elements": L.n,
                        "covers": len(L.covers()), "bottom": L.labels[L.bottom],
                        "top": L.labels[L.top]})
    return _one_or_many(reports), EXIT_OK


def cmd_props(args):
    reports = []
    for doc, L in _load(args.file):
        rep = properties.modularity_report(L)
        dist = properties.distributivity_violation(L)
        reports.append({
            "lattice": doc.name,
            "modular": rep.is_modular,
            "modular_by_triples": rep.violating_triple is None,
            "modular_by_pentagon": rep.pentagon is None,
            "violating_triple": _labels(L, rep.violating_triple),
            "pentagon": _labels(L, rep.pentagon),
            "distributive": dist is None,
            "distributivity_violation": _labels(L, dist),
        })
    return _one_or_many(reports), EXIT_OK


def cmd_series(args):
    reports = []
    for doc, L in _load(args.file):
        rs, ss = series.loewy_radical_series(L), series.loewy_socle_series(L)
        reports.append({
            "lattice": doc.name,
            "coatoms": sorted(L.labels[x] for x in L.lower_covers[L.top]),
            "atoms": sorted(L.labels[x] for x in L.upper_covers[L.bottom]),
            "radical": L.labels[series.radical(L)],
            "socle": L.labels[series.socle(L)],
            "radical_series": rs.labels(L),
            "radical_length": rs.stabilized_at,
            "hyper_radical": L.labels[rs.stable_value],
            "socle_series": ss.labels(L),
            "socle_length": ss.stabilized_at,
            "hyper_socle": L.labels[ss.stable_value],
            "longest_chain": longest_chain_length(L),
            "predicates": series.predicates(L),
        })
    return _one_or_many(reports), EXIT_OK


def _instance(name: str, params: list[str]):
    ints = [int(p) for p in params]
    if name == "chain":
        return instances.chain(*ints), f"chain{ints[0]}"
    if name == "boolean":
        return instances.boolean(*ints), f"B{ints[0]}"
    if name in ("m", "diamond"):
        return instances.diamond_m(*ints), f"M{ints[0]}"
    if name in ("n5", "pentagon"):
        return instances.pentagon(), "N5"
    if name == "divisors":
        return instances.divisor_lattice(*ints), f"div{ints[0]}"
    if name == "subgroups":
        return (instances.subgroup_lattice_abelian(ints).lattice,
                "sub_Z" + "xZ".join(map(str, ints)))
    if name == "ideals":
        return instances.ideal_lattice_zn(*ints).lattice, f"ideals_Z{ints[0]}"
    raise CliError("usage", f"unknown instance {name!r}", EXIT_PARSE)


def cmd_instance(args):
    try:
        L, default_name = _instance(args.name, args.params)
    except (TypeError, ValueError, IndexError) as exc:
        if isinstance(exc, SizeLimit):
            raise
        raise CliError("usage", f"bad arguments for instance {args.name!r}: {exc}", EXIT_PARSE)
    return format_document(from_lattice(L, args.as_name or default_name)), EXIT_OK


def _series_report(P, cap, horizon):
    s = procedural.transfinite_radical_series(P, cap, horizon=horizon)
    report = {
        "lattice": P.name,
        "note": P.note,
        "cap": str(cap),
        "entries": [list(e) for e in s.rendered()],
    }
    if s.stabilized:
        report["status"] = {"kind": "StabilizedAt", "ordinal": str(s.status.ordinal),
                            "term": P.render(s.status.term)}
        report["radical_length"] = str(s.status.ordinal)
        report["hyper_radical"] = P.render(s.hyper_radical)
        report["hyper_radical_nonzero"] = s.hyper_radical_nonzero
        return report, EXIT_OK
    report["status"] = {"kind": "CapReached", "cap": str(cap)}
    report["hyper_radical"] = None
    report["hyper_radical_nonzero"] = None
    return report, EXIT_LIMIT


def _witness_report(P, direction, bound, budget, start):
    r = procedural.search_chain(P, direction, bound, budget, start)
    if r.witness is not None:
        verdict = f"chain of length >= {bound} found"
    else:
        verdict = f"no chain of length >= {bound} found within budget (evidence, not proof)"
    return {
        "lattice": P.name,
        "direction": r.direction,
        "start": P.render(r.start),
        "bound": bound,
        "budget": budget,
        "found": r.witness is not None,
        "length": r.witness.length if r.witness else None,
        "witness": [P.render(t) for t in r.witness.terms] if r.witness else None,
        "longest_found": r.longest,
        "expanded": r.expanded,
        "budget_exhausted": r.budget_exhausted,
        "verdict": verdict,
    }, EXIT_OK


def cmd_procedural(args):
    try:
        P = procedural.builtin(args.name)
    except KeyError as exc:
        raise CliError("usage", exc.args[0], EXIT_PARSE) from exc
    if args.witness:
        start = None
        if args.start is not None:
            try:
                start = procedural.parse_term(P, args.start)
            except ValueError as exc:
                raise CliError("usage", str(exc), EXIT_PARSE) from exc
        return _witness_report(P, args.witness, args.bound, args.budget, start)
    try:
        cap = procedural.OrdinalIndex.parse(args.cap) if args.cap else procedural.DEFAULT_CAP
    except ValueError as exc:
        raise CliError("usage", str(exc), EXIT_PARSE) from exc
    return _series_report(P, cap, args.horizon)


def cmd_enumerate(args):
    spec = enumeration.CorpusSpec(args.n, args.filter, min_n=args.n, allow_large=args.allow_large)
    lattices = list(enumeration.enumerate_filtered(spec))
    if args.count_only:
        return {"n": args.n, "filter": args.filter, "count": len(lattices)}, EXIT_OK
    docs = [format_document(from_lattice(L, f"L{args.n}_{i}")) for i, L in enumerate(lattices)]
    return "\n".join(docs), EXIT_OK


def cmd_laws(args):
    ids = [args.law] if args.law else list(laws.LAWS)
    for law_id in ids:
        if law_id not in laws.LAWS:
            raise CliError("usage", f"unknown law {law_id!r}; choose from {', '.join(laws.LAWS)}",
                           EXIT_PARSE)
    full = enumeration.corpus(args.n)
    modular = [L for L in full if properties.modular_violation(L) is None]
    nonmodular = [L for L in full if properties.modular_violation(L) is not None]
    results = []
    any_violation = False
    for law_id in ids:
        law = laws.LAWS[law_id]
        if args.corpus == "nonmodular":
            if not law.requires_modular:
                continue
            universe, name = nonmodular, f"non-modular lattices, n <= {args.n}"
        elif law.requires_modular:
            universe, name = modular, f"modular lattices, n <= {args.n}"
        else:
            universe, name = full, f"all lattices, n <= {args.n}"
        rep = laws.run_law(law_id, universe, name)
        any_violation |= not rep.passed
        results.append({
            "law_id": law_id,
            "requires_modular": law.requires_modular,
            "universe": f"{rep.universe} ({len(universe)} lattices)",
            "checked": rep.checked,
            "violations": len(rep.violations),
            "examples": rep.violations[:3],
            "passed": rep.passed,
        })
    report = {"n": args.n, "corpus": args.corpus, "laws": results, "passed": not any_violation}
    if args.corpus == "nonmodular":
        report["expect_violation"] = True
        report["every_law_violated"] = all(r["violations"] > 0 for r in results)
    return report, EXIT_LAW if any_violation else EXIT_OK


# output


def _human(value, indent=0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_human(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        return "\n".join(
            (f"{pad}-\n" + _human(v, indent + 1)) if isinstance(v, dict) else f"{pad}- {_scalar(v)}"
            for v in value)
    return pad + _scalar(value)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) or
                                       (isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x))
                                       for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return ", ".join(_scalar(x) if not isinstance(x, list) else "(" + ", ".join(map(str, x)) + ")"
                         for x in v)
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def render(payload, human: bool = False) -> str:
    if isinstance(payload, str):
        return payload if payload.endswith("\n") or not payload else payload + "\n"
    if human:
        return _human(payload) + "\n"
    return json.dumps(payload, indent=2, ensure_ascii=False) + "\n"


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="loewy", description=__doc__.splitlines()[0])
    p.add_argument("--human", action="store_true", help="human-readable output instead of JSON")
    sub = p.add_subparsers(dest="command", required=True)

    for name, fn, text in (("validate", cmd_validate, "parse and build a lattice document"),
                           ("props", cmd_props, "modularity and distributivity"),
                           ("series", cmd_series, "radical, socle and Loewy series")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("file", help="lattice document, '-' for stdin")
        sp.set_defaults(func=fn)

    sp = sub.add_parser("instance", help="emit a built-in finite lattice as a document")
    sp.add_argument("name", choices=["chain", "boolean", "m", "diamond", "n5", "pentagon",
                                     "divisors", "subgroups", "ideals"])
    sp.add_argument("params", nargs="*")
    sp.add_argument("--as-name", help="document name to emit")
    sp.set_defaults(func=cmd_instance)

    sp = sub.add_parser("procedural", help="series or chain witnesses on an infinite lattice")
    sp.add_argument("name", help="omega_plus_one_chain | divisibility | germ_model")
    mode = sp.add_mutually_exclusive_group(required=True)
    mode.add_argument("--series", action="store_true")
    mode.add_argument("--witness", choices=["asc", "desc"])
    sp.add_argument("--cap", help="ordinal cap such as ω·2 or w*4+64")
    sp.add_argument("--horizon", type=int, default=procedural.DEFAULT_HORIZON,
                    help="finite steps materialized per omega-run")
    sp.add_argument("--bound", type=int, default=1000)
    sp.add_argument("--budget", type=int, default=100_000)
    sp.add_argument("--start", help="start term for witness search")
    sp.set_defaults(func=cmd_procedural)

    sp = sub.add_parser("enumerate", help="all lattices with N elements up to isomorphism")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--filter", choices=["all", "modular", "distributive", "nonmodular"],
                    default="all")
    sp.add_argument("--count-only", action="store_true")
    sp.add_argument("--allow-large", action="store_true", help="lift the n <= 8 cap")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("laws", help="run the law harness over the corpus n <= N")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--law")
    sp.add_argument("--corpus", choices=["contract", "nonmodular"], default="contract",
                    help="'nonmodular' runs modularity-dependent laws where they should fail")
    sp.set_defaults(func=cmd_laws)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        payload, code = args.func(args)
    except CliError as exc:
        err = {"error": {"code": exc.code, "message": exc.message, **exc.extra}}
        sys.stdout.write(render(err, args.human))
        print(f"loewy: {exc.message}", file=sys.stderr)
        return exc.exit_code
    except SizeLimit as exc:
        sys.stdout.write(render({"error": {"code": exc.code, "message": str(exc)}}, args.human))
        print(f"loewy: {exc}", file=sys.stderr)
        return EXIT_LIMIT
    except LatticeError as exc:
        sys.stdout.write(render({"error": {"code": exc.code, "message": str(exc)}}, args.human))
        print(f"loewy: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    sys.stdout.write(render(payload, args.human))
    return code


if __name__ == "__main__":
    sys.exit(main())
