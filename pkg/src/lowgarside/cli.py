"""Command-line front end.

Exit codes: 0 success / equal, 1 mismatch / unequal, 2 usage error,
3 cap exceeded, 4 internal invariant violation.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from dataclasses import dataclass

from .automaton import build_canonical_automaton, to_dot as automaton_dot
from .coxeter import CoxeterMatrix, InvalidMatrix, UnknownType, catalog, is_spherical, parse_coxeter_input
from .low import EscapedLow, GarsideFamily, NotApplicable, enumerate_low, smallest_family, type_oracle, verify_family
from .monoid import InternalDivisionFailure, OutsideSupportedFamily, f_normal_form, left_divides, monoid_eq, right_lcm_simple
from .roots import CapExceeded, NEGATIVE_SIMPLE, NON_SMALL_POSITIVE, enumerate_small_roots
from .weak_order import CoxeterGroup, Element, JoinAmbiguity, UnknownGenerator

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAP, EXIT_INTERNAL = 0, 1, 2, 3, 4

# (type, rank) -> (#E, #F)
REFERENCE_COUNTS = {
    ("affineA", 2): (3, 16),
    ("affineA", 3): (10, 125),
    ("affineA", 4): (35, 1296),
    ("affineB", 3): (14, 315),
    ("affineC", 2): (3, 24),
    ("affineC", 3): (12, 317),
}


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    matrix: CoxeterMatrix
    fmt: str = "text"
    cap_sigma: int = 10**6
    cap_low: int = 10**6
    cap_bfs: int = 10**6
    cap_states: int = 10**7

    def __post_init__(self):
        for name in ("cap_sigma", "cap_low", "cap_bfs", "cap_states"):
            if getattr(self, name) <= 0:
                raise UsageError(f"--{name.replace('_', '-')} must be positive")


class Session:
    """Lazily computed objects for one system."""

    def __init__(self, config: RunConfig):
        self.config = config
        self.group = CoxeterGroup(config.matrix)
        self._table = self._low = self._family = None

    @property
    def table(self):
        if self._table is None:
            self._table = enumerate_small_roots(self.group.roots, cap=self.config.cap_sigma)
        return self._table

    @property
    def low(self):
        if self._low is None:
            self._low = enumerate_low(self.group, self.table, cap=self.config.cap_low)
        return self._low

    @property
    def family(self) -> GarsideFamily:
        if self._family is None:
            self._family = smallest_family(self.low)
        return self._family


# ---------------------------------------------------------------------------
# parsing helpers


def reorder(matrix: CoxeterMatrix, order: str) -> CoxeterMatrix:
    names = [x for x in re.split(r"[\s,]+", order.strip()) if x]
    if sorted(names) != sorted(matrix.generators):
        raise UsageError(f"--order must be a permutation of {', '.join(matrix.generators)}")
    perm = [matrix.index(x) for x in names]
    rows = tuple(tuple(matrix[i, j] for j in perm) for i in perm)
    return CoxeterMatrix(tuple(names), rows, matrix.name)


def parse_word(group: CoxeterGroup, text: str) -> tuple[int, ...]:
    text = text.strip()
    if text in ("", "e"):
        return ()
    parts = [x for x in re.split(r"[\s,]+", text) if x]
    gens = group.matrix.generators
    if len(parts) == 1 and parts[0] not in gens and parts[0].isdigit() \
            and all(len(g) == 1 and g.isdigit() for g in gens):
        parts = list(parts[0])
    return group.letters(parts)


def config_from_args(args) -> RunConfig:
    if args.matrix:
        with open(args.matrix) as fh:
            matrix = parse_coxeter_input(fh.read())
    elif args.type:
        edges = json.loads(args.edges) if args.edges else None
        bond = None
        if args.bond is not None:
            bond = float("inf") if args.bond.lower() in ("inf", "infinity") else int(args.bond)
        matrix = catalog(args.type, args.rank, bond, edges)
    else:
        raise UsageError("give a system with --type/--rank or --matrix")
    if args.order:
        matrix = reorder(matrix, args.order)
    return RunConfig(matrix, args.format, args.cap_sigma, args.cap_low, args.cap_bfs, args.cap_states)


# ---------------------------------------------------------------------------
# output helpers


def dump(rows, fmt, header, out):
    """rows: list of dicts with keys ``header``."""
    if fmt == "json":
        out.write(json.dumps(rows, indent=2) + "\n")
    elif fmt == "tsv":
        out.write("\t".join(header) + "\n")
        for r in rows:
            out.write("\t".join(str(r[h]) for h in header) + "\n")
    else:
        for r in rows:
            out.write("  ".join(f"{h}={r[h]}" for h in header) + "\n")


def scalar_text(c) -> str:
    coeffs = c.coefficients()
    if len(coeffs) == 1:
        return str(coeffs[0])
    return "[" + ",".join(str(x) for x in coeffs) + "]"


def element_rows(sess: Session, elements, extra=None):
    g = sess.group
    rows = []
    for w in elements:
        row = {"word": g.format(w), "length": len(w)}
        if extra:
            row.update(extra(w))
        rows.append(row)
    return rows


def family_document(sess: Session) -> dict:
    fam = sess.family
    g = sess.group
    return {
        "system": sess.config.matrix.to_document(),
        "elements": [g.names(w) for w in fam.elements],
        "extremals": [g.names(w) for w in fam.extremals],
    }


def load_family_document(doc: dict) -> tuple[CoxeterGroup, list[Element], list[Element]]:
    group = CoxeterGroup(parse_coxeter_input(doc["system"]))
    elements = [group.reduce_word(w) for w in doc["elements"]]
    extremals = [group.reduce_word(w) for w in doc.get("extremals", [])]
    return group, elements, extremals


def cayley_edges(group: CoxeterGroup, members) -> list[tuple[Element, int, Element]]:
    """Edges u -> s u inside the family with l(s u) = l(u) + 1, in node order."""
    member_set = set(members)
    edges = []
    for u in sorted(member_set):
        for s in range(group.rank):
            if s in u.inversions:
                continue
            v = group.left_mul(s, u)
            if v in member_set:
                edges.append((u, s, v))
    return edges


def cayley_dot(group: CoxeterGroup, members) -> str:
    nodes = sorted(set(members))
    num = {w: i for i, w in enumerate(nodes)}
    lines = [
        "// Cayley graph of the smallest Garside family (projected to W).",
        "// edge u -> s u for left multiplication by s with l(s u) = l(u) + 1",
        "// the identity is drawn as a box (its label 1 can clash with a generator name)",
        "digraph garside_family {",
    ]
    for w in nodes:
        shape = ", shape=box" if not len(w) else ""
        lines.append(f'  n{num[w]} [label="{group.format(w)}"{shape}];')
    for u, s, v in cayley_edges(group, nodes):
        lines.append(f'  n{num[u]} -> n{num[v]} [label="{group.matrix.generators[s]}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def system_report(sess: Session) -> dict:
    g = sess.group
    low, fam = sess.low, sess.family
    rep = {
        "system": sess.config.matrix.name or "matrix",
        "generators": list(g.matrix.generators),
        "small_roots": len(sess.table),
        "low": len(low),
        "family": len(fam),
        "extremals": len(fam.extremals),
        "extremal_words": [g.format(w, "s") for w in fam.extremals],
        "low_not_in_family": [g.format(w, "s") for w in low.elements if w not in fam],
    }
    try:
        predicted = type_oracle(g, cap=sess.config.cap_bfs)
    except NotApplicable:
        pass
    else:
        same = predicted == set(fam) == set(low)
        rep["closed_form"] = "matches" if same else "differs"
    if is_spherical(g.matrix):
        rep["note"] = "spherical: pi(F) = W"
    return rep


# ---------------------------------------------------------------------------
# commands


def cmd_roots_small(sess, args, out):
    t = sess.table
    tag = {NON_SMALL_POSITIVE: "nonsmall", NEGATIVE_SIMPLE: "negsimple"}
    rows = []
    for k, r in enumerate(t.roots):
        row = {
            "index": k,
            "depth": t.depth[k],
            "coefficients": " ".join(scalar_text(c) for c in r.coeffs),
            "transitions": " ".join(tag.get(x, str(x)) for x in t.transitions[k]),
        }
        rows.append(row)
    dump(rows, sess.config.fmt, ["index", "depth", "coefficients", "transitions"], out)
    return EXIT_OK


def cmd_low_enumerate(sess, args, out):
    dump(element_rows(sess, sess.low.elements), sess.config.fmt, ["word", "length"], out)
    return EXIT_OK


def cmd_garside_family(sess, args, out):
    if sess.config.fmt == "json":
        out.write(json.dumps(family_document(sess), indent=2) + "\n")
        return EXIT_OK
    fam = sess.family
    g = sess.group

    def prov(w):
        why = fam.provenance[w]
        return {"provenance": why[0] + "".join(f"({g.format(x)})" for x in why[1:])}

    dump(element_rows(sess, fam.elements, prov), sess.config.fmt, ["word", "length", "provenance"], out)
    return EXIT_OK


def cmd_garside_extremals(sess, args, out):
    dump(element_rows(sess, sess.family.extremals), sess.config.fmt, ["word", "length"], out)
    return EXIT_OK


def cmd_garside_verify(sess, args, out):
    rep = verify_family(sess.family, sess.low)
    problems = rep.lines() + sess.low.closure_report()
    if sess.config.fmt == "json":
        out.write(json.dumps({"ok": not problems, "violations": problems}, indent=2) + "\n")
    else:
        out.write("ok\n" if not problems else "\n".join(problems) + "\n")
    return EXIT_OK if not problems else EXIT_MISMATCH


def cmd_nf(sess, args, out):
    g = sess.group
    for text in args.words:
        nf = f_normal_form(g, parse_word(g, text), sess.family)
        out.write(" | ".join(g.format(e) for e in nf.entries) + "\n")
    return EXIT_OK


def cmd_eq(sess, args, out):
    g = sess.group
    u, v = parse_word(g, args.left), parse_word(g, args.right)
    equal = monoid_eq(g, u, v, sess.family)
    out.write(("equal" if equal else "different") + "\n")
    return EXIT_OK if equal else EXIT_MISMATCH


def cmd_divides(sess, args, out):
    g = sess.group
    f = g.reduce_word(parse_word(g, args.divisor))
    if len(f) != len(parse_word(g, args.divisor)):
        raise UsageError("the divisor must be a reduced word (a simple element)")
    yes = left_divides(g, f, parse_word(g, args.word))
    out.write(("yes" if yes else "no") + "\n")
    return EXIT_OK if yes else EXIT_MISMATCH


def cmd_lcm(sess, args, out):
    g = sess.group
    f = g.reduce_word(parse_word(g, args.left))
    h = g.reduce_word(parse_word(g, args.right))
    z = right_lcm_simple(g, f, h, sess.low)
    if z is None:
        out.write("none\n")
        return EXIT_MISMATCH
    out.write(g.format(z) + "\n")
    return EXIT_OK


def cmd_automaton_count(sess, args, out):
    a = build_canonical_automaton(sess.table, cap=sess.config.cap_states)
    if sess.config.fmt == "dot":
        out.write(automaton_dot(a, list(sess.group.matrix.generators)))
    elif sess.config.fmt == "json":
        out.write(json.dumps({"states": len(a)}) + "\n")
    else:
        out.write(f"{len(a)}\n")
    return EXIT_OK


def cmd_cayley(sess, args, out):
    g = sess.group
    fam = sess.family
    fmt = sess.config.fmt
    if fmt in ("dot", "text"):
        out.write(cayley_dot(g, fam.elements))
    elif fmt == "json":
        nodes = sorted(fam.elements)
        doc = {
            "convention": "edge u -> s u, l(s u) = l(u) + 1",
            "nodes": [g.format(w) for w in nodes],
            "edges": [[g.format(u), g.matrix.generators[s], g.format(v)] for u, s, v in cayley_edges(g, nodes)],
        }
        out.write(json.dumps(doc, indent=2) + "\n")
    else:
        dump([{"source": g.format(u), "generator": g.matrix.generators[s], "target": g.format(v)}
              for u, s, v in cayley_edges(g, fam.elements)], "tsv", ["source", "generator", "target"], out)
    return EXIT_OK


def cmd_report(args, out):
    fmt = args.format
    if args.preset == "table1":
        rows = []
        mismatch = False
        for (t, n), (e_exp, f_exp) in REFERENCE_COUNTS.items():
            cfg = RunConfig(catalog(t, n), fmt, args.cap_sigma, args.cap_low, args.cap_bfs, args.cap_states)
            rep = system_report(Session(cfg))
            ok = rep["extremals"] == e_exp and rep["family"] == f_exp
            mismatch |= not ok
            rows.append({
                "system": f"{t}{n}", "small_roots": rep["small_roots"], "low": rep["low"],
                "E": rep["extremals"], "E_expected": e_exp, "F": rep["family"], "F_expected": f_exp,
                "match": "yes" if ok else "NO",
            })
        dump(rows, fmt, ["system", "small_roots", "low", "E", "E_expected", "F", "F_expected", "match"], out)
        return EXIT_MISMATCH if mismatch else EXIT_OK
    if args.preset:
        raise UsageError(f"unknown report preset {args.preset!r}")
    sess = Session(config_from_args(args))
    rep = system_report(sess)
    if fmt == "json":
        out.write(json.dumps(rep, indent=2) + "\n")
    else:
        for k, v in rep.items():
            out.write(f"{k}: {json.dumps(v) if isinstance(v, list) else v}\n")
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    grp = common.add_argument_group("system")
    grp.add_argument("--type", help="catalog type: A, B, D, H, I2, affineA, affineB, affineC, large, rightangled")
    grp.add_argument("--rank", type=int)
    grp.add_argument("--bond", help="bond label for I2 / large types")
    grp.add_argument("--edges", help="JSON list of commuting pairs for rightangled")
    grp.add_argument("--matrix", help="path to a JSON matrix document")
    grp.add_argument("--order", help="generator order, e.g. '3 1 2'")
    common.add_argument("--format", default="text", choices=["text", "json", "tsv", "dot"])
    common.add_argument("--cap-sigma", type=int, default=10**6)
    common.add_argument("--cap-low", type=int, default=10**6)
    common.add_argument("--cap-bfs", type=int, default=10**6)
    common.add_argument("--cap-states", type=int, default=10**7)

    p = argparse.ArgumentParser(prog="lowgarside", description="Small roots, low elements and Garside families.")
    sub = p.add_subparsers(dest="command", required=True)

    def group_cmd(name, actions):
        sp = sub.add_parser(name)
        ss = sp.add_subparsers(dest="action", required=True)
        for action, fn in actions.items():
            ss.add_parser(action, parents=[common]).set_defaults(func=fn)

    group_cmd("roots", {"small": cmd_roots_small})
    group_cmd("low", {"enumerate": cmd_low_enumerate})
    group_cmd("garside", {"family": cmd_garside_family, "extremals": cmd_garside_extremals,
                          "verify": cmd_garside_verify})
    group_cmd("automaton", {"count": cmd_automaton_count})

    sp = sub.add_parser("nf", parents=[common])
    sp.add_argument("words", nargs="+")
    sp.set_defaults(func=cmd_nf)
    sp = sub.add_parser("eq", parents=[common])
    sp.add_argument("left")
    sp.add_argument("right")
    sp.set_defaults(func=cmd_eq)
    sp = sub.add_parser("divides", parents=[common])
    sp.add_argument("divisor")
    sp.add_argument("word")
    sp.set_defaults(func=cmd_divides)
    sp = sub.add_parser("lcm", parents=[common])
    sp.add_argument("left")
    sp.add_argument("right")
    sp.set_defaults(func=cmd_lcm)
    sp = sub.add_parser("cayley", parents=[common])
    sp.set_defaults(func=cmd_cayley)
    sp = sub.add_parser("report", parents=[common])
    sp.add_argument("preset", nargs="?")
    sp.set_defaults(func=None)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "report":
            return cmd_report(args, out)
        sess = Session(config_from_args(args))
        return args.func(sess, args, out)
    except (UsageError, InvalidMatrix, UnknownType, UnknownGenerator, OutsideSupportedFamily, OSError,
            json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapExceeded as exc:
        print(f"cap exceeded: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (JoinAmbiguity, EscapedLow, InternalDivisionFailure) as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
