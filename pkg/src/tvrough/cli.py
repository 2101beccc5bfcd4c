"""Command line interface: ``tvrough <command> [options]``.

Exit codes: 0 success, 1 negative verdict under --strict, 2 input error,
3 internal invariant violation.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import decision, diagrams, family as fam, relspace
from .errors import InvariantViolation, TvRoughError
from .fileio import (
    InputError,
    dump_document,
    family_document,
    load_family,
    load_family_labelled,
    load_relation,
    parse_set,
    to_jsonable,
)
from .pairs import phi, pair_op  # noqa: F401  (pair_op re-exported for scripting)

EXIT_OK, EXIT_NEGATIVE, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class Outcome:
    """Collected human-readable lines, a JSON mirror and the verdict sign."""

    def __init__(self):
        self.lines: list[str] = []
        self.data: dict = {}
        self.negative = False
        self.labels: dict = {}

    def say(self, line: str = "") -> None:
        self.lines.append(line)


def _fmt_value(v, labels: dict) -> str:
    if v in labels:
        return f"{labels[v]}{v}"
    return str(v)


def _fmt_witness(w, labels: dict | None = None) -> str:
    if not w:
        return ""
    labels = labels or {}
    return " ".join(f"{k}={_fmt_value(v, labels)}" for k, v in w.items() if not isinstance(v, (list, dict)))


def _relation(args):
    r = load_relation(args.input)
    if args.closure:
        r = relspace.reflexive_transitive_closure(r)
    return r


def _family(args, out: Outcome):
    F, labels = load_family_labelled(args.input)
    out.labels = labels
    if getattr(args, "close", False):
        closed = fam.close_polarity(F)
        out.say(f"note: input pre-closed with --close ({len(F)} -> {len(closed)} functions)")
        out.data["closed_by_flag"] = True
        F = closed
    return F


def _emit_diagram(args, elements, leq, label, out: Outcome, name: str):
    if getattr(args, "dot", None):
        Path(args.dot).write_text(diagrams.hasse_dot(elements, leq, label, name))
        out.say(f"dot: wrote {args.dot}")
        out.data["dot"] = str(args.dot)
    if getattr(args, "plot", None):
        diagrams.plot_hasse(elements, leq, args.plot, label, title=name)
        out.say(f"plot: wrote {args.plot}")
        out.data["plot"] = str(args.plot)


def _pair_table(out: Outcome, pairs) -> None:
    out.say("lower\tupper\tfunction")
    from .pairs import phi_inv

    for p in pairs:
        out.say(f"{p.lower}\t{p.upper}\t{phi_inv(p)}")


# commands -------------------------------------------------------------------

def cmd_approx(args, out: Outcome):
    r = _relation(args)
    X = parse_set(r.universe, args.set or "")
    lo, up = relspace.lower(r, X), relspace.upper(r, X)
    out.say(f"X\t{X}")
    out.say(f"lower\t{lo}")
    out.say(f"upper\t{up}")
    out.data.update(set=X, lower=lo, upper=up)


def cmd_rs_enumerate(args, out: Outcome):
    r = _relation(args)
    flags = relspace.relation_predicates(r)
    rs = relspace.rs_enumerate(r)
    out.say(f"relation\t{r}")
    out.say("flags\t" + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in flags.as_dict().items()))
    out.say(f"pairs\t{len(rs)}")
    _pair_table(out, rs.pairs)
    out.data.update(relation=r, flags=flags, pairs=list(rs.pairs))
    _emit_diagram(args, list(rs.pairs), relspace.pair_leq, str, out, "rough_sets")


def cmd_rs_alt(args, out: Outcome):
    r = _relation(args)
    pairs = relspace.rs_alt(r, args.alt_mode)
    lat = relspace.is_lattice(pairs)
    out.say(f"mode\t{args.alt_mode}")
    out.say(f"pairs\t{len(pairs)}")
    _pair_table(out, pairs)
    if lat:
        out.say("lattice\tyes")
    else:
        w = lat.witness
        a, b = w["pair"]
        bounds = w.get("minimal_upper_bounds", w.get("maximal_lower_bounds"))
        what = "minimal upper bounds" if w["kind"] == "join" else "maximal lower bounds"
        out.say(f"lattice\tno: {a} and {b} have {what} {', '.join(str(p) for p in bounds)}")
        out.negative = True
    out.data.update(mode=args.alt_mode, pairs=pairs, lattice=lat)
    _emit_diagram(args, pairs, relspace.pair_leq, str, out, "alternative_rough_sets")


def _verdict_lines(out: Outcome, label: str, v: decision.Verdict) -> None:
    reasons = f" ({', '.join(v.failure_names())})" if v.failures else ""
    out.say(f"{label}\t{v.answer}{reasons}")
    if v.relation is not None:
        out.say(f"{label}.relation\t{v.relation}")
        out.say(f"{label}.certificate\t{'yes' if v.certificate else 'no'}")


def cmd_family_check(args, out: Outcome):
    F = _family(args, out)
    out.say(f"family\t{len(F)} functions on {{{','.join(F.universe)}}}")
    closed = fam.is_complete_polarity_sublattice(F)
    if closed:
        out.say("closure\talready closed")
    else:
        w = closed.witness
        how = w["kind"]
        if "g" in w:
            how = f"{how} of {_fmt_value(w['f'], out.labels)} and {_fmt_value(w['g'], out.labels)}"
        elif "f" in w:
            how = f"{how} of {_fmt_value(w['f'], out.labels)}"
        out.say(f"closure\tnot closed: missing {w['missing']} [{how}]")
    out.data["closure"] = closed
    ops = fam.closure_ops_check(F)
    out.say("ops\t" + " ".join(f"{k}={'yes' if v else 'no'}" for k, v in ops.items()))
    out.data["ops"] = ops
    if closed:
        checks = {"C1": fam.check_c1(F), "C2": fam.check_c2(F), "C3": fam.check_c3(F)}
        for name, c in checks.items():
            status = "pass" if c else f"fail {_fmt_witness(c.witness, out.labels)}"
            out.say(f"{name}\t{status}")
        d = checks["C2"].detail
        out.say("C2.f_lower_cores\t" + " ".join(f"{x}:{s}" for x, s in d["f_lower_cores"].items()))
        out.say("C2.f_upper_cores\t" + " ".join(f"{x}:{s}" for x, s in d["f_upper_cores"].items()))
        variant = "pass" if d["upper_variant_holds"] else f"fail x={d['upper_variant_witness']}"
        out.say(f"C2.upper_variant\t{variant}")
        out.say("singletons\t" + str(checks["C1"].detail["singletons"]))
        out.say("theta\t" + " | ".join(" ".join(_fmt_value(f, out.labels) for f in c) for c in fam.theta_classes(F)))
        out.data["checks"] = checks
        out.data["singletons"] = checks["C1"].detail["singletons"]
        out.data["theta"] = fam.theta_classes(F)
    vq = decision.decide_quasiorder(F)
    ve = decision.decide_equivalence(F)
    _verdict_lines(out, "quasiorder", vq)
    _verdict_lines(out, "equivalence", ve)
    out.data["quasiorder"] = vq
    out.data["equivalence"] = ve
    out.negative = not vq.yes


def cmd_family_close(args, out: Outcome):
    F = load_family(args.input)
    closed = fam.close_polarity(F)
    doc = dump_document(family_document(closed))
    if args.output:
        Path(args.output).write_text(doc)
        out.say(f"closed family ({len(F)} -> {len(closed)} functions) written to {args.output}")
    else:
        out.say(doc.rstrip("\n"))
    out.data.update(input_size=len(F), closed_size=len(closed), family=family_document(closed))


def cmd_iso_map(args, out: Outcome):
    F = _family(args, out)
    fam.require_polarity(F)
    out.say("function\tlower\tupper")
    for f in F:
        p = phi(f)
        out.say(f"{f}\t{p.lower}\t{p.upper}")
    js = fam.join_irreducibles(F)
    out.say("join_irreducibles\t" + " ".join(str(f) for f in js))
    out.say(f"cores\t{fam.cores(F)}")
    out.say(f"supports\t{fam.supports(F)}")
    r = fam.quasiorder_of_family(F)
    out.say(f"leq_F\t{r}")
    out.data.update(
        pairs=[{"function": f, "pair": phi(f)} for f in F],
        join_irreducibles=js,
        cores=fam.cores(F),
        supports=fam.supports(F),
        leq_F=r,
    )
    _emit_diagram(args, list(F.members), lambda f, g: f <= g, str, out, "family")


def cmd_sweep(args, out: Outcome):
    rep = decision.sweep(args.max_size, args.mode)
    out.say("n\trelations\tquasiorders\tequivalences\tviolations")
    for n, c in rep.counts.items():
        out.say(f"{n}\t{c['relations']}\t{c['quasiorders']}\t{c['equivalences']}\t{c['violations']}")
    out.say(f"total\t{rep.total}\tviolations\t{len(rep.violations)}")
    if rep.violations:
        v = rep.violations[0]
        out.say(f"first_violation\tn={v['n']} relation={v['relation']} items={','.join(v['items'])}")
    out.data.update(report=rep)
    _write_summary(args, out)
    if not rep.ok:
        raise InvariantViolation("sweep found violations")


def cmd_random_sweep(args, out: Outcome):
    rep = decision.random_family_sweep(args.max_size, args.trials, args.seed)
    out.say(f"n\t{rep.n}\ttrials\t{rep.trials}\tseed\t{rep.seed}")
    out.say("tallies\t" + " ".join(f"{k}={v}" for k, v in rep.tallies.items()))
    out.say(f"violations\t{len(rep.violations)}")
    if rep.violations:
        v = rep.violations[0]
        out.say(f"first_violation\ttrial={v['trial']} reason={v['reason']} family={v['family']}")
    out.data.update(report=rep)
    _write_summary(args, out)
    if not rep.ok:
        raise InvariantViolation("random sweep found violations")


def cmd_subalgebras(args, out: Outcome):
    found = decision.enumerate_subalgebras(args.max_size, args.kind)
    census = {"yes-quasiorder": 0, "yes-equivalence": 0}
    out.say("size\tquasiorder\tequivalence\tfamily")
    rows = []
    for F in found:
        vq, ve = decision.decide_quasiorder(F), decision.decide_equivalence(F)
        census["yes-quasiorder"] += vq.yes
        census["yes-equivalence"] += ve.yes
        out.say(f"{len(F)}\t{vq.answer}\t{ve.answer}\t{F}")
        rows.append({"family": F, "quasiorder": vq.answer, "equivalence": ve.answer})
    out.say(f"total\t{len(found)}\t" + " ".join(f"{k}={v}" for k, v in census.items()))
    out.data.update(kind=args.kind, n=args.max_size, count=len(found), census=census, families=rows)
    _write_summary(args, out)


def _write_summary(args, out: Outcome) -> None:
    if getattr(args, "summary", None):
        Path(args.summary).write_text(json.dumps(to_jsonable(out.data), indent=2) + "\n")
        out.say(f"summary: wrote {args.summary}")


COMMANDS = {
    "approx": cmd_approx,
    "rs-enumerate": cmd_rs_enumerate,
    "rs-alt": cmd_rs_alt,
    "family-check": cmd_family_check,
    "family-close": cmd_family_close,
    "iso-map": cmd_iso_map,
    "sweep": cmd_sweep,
    "random-sweep": cmd_random_sweep,
    "subalgebras": cmd_subalgebras,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tvrough", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON mirror of the output")
    common.add_argument("--strict", action="store_true", help="exit 1 on a negative verdict")

    rel = argparse.ArgumentParser(add_help=False)
    rel.add_argument("--input", required=True, help="relation JSON file")
    rel.add_argument("--closure", action="store_true", help="use the reflexive-transitive closure")

    famp = argparse.ArgumentParser(add_help=False)
    famp.add_argument("--input", required=True, help="family JSON file")
    famp.add_argument("--close", action="store_true", help="pre-close the family under meet, join and ~")

    draw = argparse.ArgumentParser(add_help=False)
    draw.add_argument("--dot", metavar="PATH", help="write the Hasse diagram as Graphviz DOT")
    draw.add_argument("--plot", metavar="PATH", help="render the Hasse diagram with matplotlib")

    summ = argparse.ArgumentParser(add_help=False)
    summ.add_argument("--summary", metavar="PATH", help="write a JSON summary file")

    s = sub.add_parser("approx", parents=[common, rel], help="lower and upper approximation of a set")
    s.add_argument("--set", default="", help="comma-separated element names")
    sub.add_parser("rs-enumerate", parents=[common, rel, draw], help="all rough sets of a relation")
    s = sub.add_parser("rs-alt", parents=[common, rel, draw], help="alternative approximations and lattice test")
    s.add_argument("--alt-mode", choices=relspace.ALT_MODES, default="interior-closure")
    sub.add_parser("family-check", parents=[common, famp], help="closure, C1-C3 and verdicts for a family")
    s = sub.add_parser("family-close", parents=[common], help="close a family and write it back")
    s.add_argument("--input", required=True, help="family JSON file")
    s.add_argument("--output", metavar="PATH", help="write here instead of stdout")
    sub.add_parser("iso-map", parents=[common, famp, draw], help="approximation pairs and induced structure")
    s = sub.add_parser("sweep", parents=[common, summ], help="exhaustive check over all quasiorders")
    s.add_argument("--max-size", type=int, default=3)
    s.add_argument("--mode", choices=decision.SWEEP_MODES, default="both")
    s = sub.add_parser("random-sweep", parents=[common, summ], help="random families, both directions")
    s.add_argument("--max-size", type=int, default=3, help="universe size n")
    s.add_argument("--trials", type=int, default=100)
    s.add_argument("--seed", type=int, default=0)
    s = sub.add_parser("subalgebras", parents=[common, summ], help="enumerate subalgebras of 3^U")
    s.add_argument("--max-size", type=int, default=2, help="universe size n")
    s.add_argument("--kind", choices=decision.SUBALGEBRA_KINDS, default="lukasiewicz")
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    out = Outcome()
    code = EXIT_OK
    try:
        COMMANDS[args.command](args, out)
    except InvariantViolation as e:
        out.say(f"internal invariant violated: {e}")
        out.data["error"] = str(e)
        code = EXIT_INTERNAL
    except (InputError, TvRoughError, KeyError, ValueError) as e:
        msg = e.args[0] if isinstance(e, KeyError) and e.args else str(e)
        print(f"tvrough {args.command}: error: {msg}", file=sys.stderr)
        return EXIT_INPUT
    if code == EXIT_OK and args.strict and out.negative:
        code = EXIT_NEGATIVE
    if args.json:
        print(json.dumps(to_jsonable(out.data), indent=2))
    else:
        print("\n".join(out.lines))
    return code


if __name__ == "__main__":
    sys.exit(main())
