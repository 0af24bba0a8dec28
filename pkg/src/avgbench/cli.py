"""Command line front end.

    avgbench VERB SUBJECT [FILE] [options]

Exit status: 0 on success, 1 when a verification fails, 2 on input or guard
errors.  Enumerations stream one JSON object per line.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable, Dict, Iterable, List, Optional, Tuple

from . import io
from .averaging import (
    descendent_rack,
    enumerate_averaging,
    graph_check,
    is_averaging,
    power_hierarchy,
    product_rack,
)
from .group_algebra import extend_operator, is_hopf_averaging, restrict_operator
from .groups import automorphism_group, validate_action
from .leibniz import (
    embed_di_leibniz,
    embed_lie_leibniz,
    is_linear_averaging,
    leibnizification,
    validate_algebra,
)
from .magma import (
    FiniteMagma,
    GuardExceeded,
    StructureError,
    Verdict,
    enumerate_racks,
    is_rack,
    magma_automorphisms,
    standard_rack,
    validate_rack,
)
from .pairings import (
    brace_lemma_check,
    brace_to_pairing,
    classify_pairing,
    dirack_from_pairing,
    enumerate_regular_subracks,
    is_dirack,
    is_group_rack,
    is_rack_pairing,
    lambda_criterion,
    pairing_from_dirack,
    pairing_from_subrack,
    subrack_from_pairing,
    symmetric_criterion,
    RackPairing,
)
from .ybe import braided_from_rack, is_invertible, is_ybe_solution


class Failure(Exception):
    """A verification came out false; carries the report to print."""

    def __init__(self, report: dict):
        super().__init__("verification failed")
        self.report = report


def _verdict(v: Verdict, key: str) -> dict:
    out = {key: v.ok}
    if not v.ok:
        out["axiom"] = v.axiom
        out["witness"] = list(v.witness or ())
    return out


def _require_ok(report: dict, key: str) -> dict:
    if not report.get(key):
        raise Failure(report)
    return report


def _input(args) -> str:
    path = args.file or args.input
    if not path:
        raise io.InputError(f"{args.verb} {args.subject} needs an input file", "input")
    return path


def _carrier(args):
    if args.group:
        return io.group_from_json(io.load_json(args.group))
    if args.rack:
        return io.magma_from_json(io.load_json(args.rack))
    if args.file or args.input:
        return io.magma_from_json(io.load_json(_input(args)))
    raise io.InputError("give the carrier with --rack or --group", "input")


def _operator(args):
    if not args.operator:
        raise io.InputError("give the operator with --operator", "input")
    return io.operator_from_json(io.load_json(args.operator))


def _group(args):
    if not args.group:
        raise io.InputError("give the group with --group", "input")
    return io.group_from_json(io.load_json(args.group))


# verify


def verify_rack(args):
    m = io.magma_from_json(io.load_json(_input(args)))
    report = validate_rack(m, args.pointed_at).to_dict()
    return _require_ok(report, "is_rack")


def verify_group(args):
    m = io.magma_from_json(io.load_json(_input(args)))
    from .groups import validate_group

    try:
        g = validate_group(m)
    except StructureError as err:
        raise Failure({"is_group": False, "axiom": err.axiom, "witness": list(err.witness)})
    return {"is_group": True, "identity": g.identity, "order": g.order, "abelian": g.is_abelian()}


def verify_action(args):
    a = io.action_from_json(io.load_json(_input(args)))
    return _require_ok(_verdict(validate_action(a), "is_action"), "is_action")


def verify_averaging(args):
    return _require_ok(_verdict(is_averaging(_carrier(args), _operator(args)), "is_averaging"), "is_averaging")


def verify_pairing(args):
    p = io.pairing_from_json(io.load_json(_input(args)))
    report = _verdict(is_rack_pairing(p), "is_pairing")
    report.update(classify_pairing(p).to_dict())
    return _require_ok(report, "is_pairing")


def verify_group_rack(args):
    g = _group(args)
    bd = io.magma_from_json(io.load_json(_input(args)))
    return _require_ok(_verdict(is_group_rack(g, bd, pointed=args.pointed_only), "is_group_rack"), "is_group_rack")


def verify_dirack(args):
    d = io.dirack_from_json(io.load_json(_input(args)))
    return _require_ok(_verdict(is_dirack(d), "is_dirack"), "is_dirack")


def verify_brace(args):
    from .pairings import validate_skew_brace

    dot, bullet = io.brace_tables_from_json(io.load_json(_input(args)))
    try:
        b = validate_skew_brace(dot, bullet)
    except StructureError as err:
        raise Failure({"is_skew_brace": False, "axiom": err.axiom, "witness": list(err.witness)})
    report = {"is_skew_brace": True, "two_sided": b.two_sided}
    if b.two_sided:
        report["lemma"] = bool(brace_lemma_check(b))
    return report


def verify_solution(args):
    s = io.solution_from_json(io.load_json(_input(args)))
    report = _verdict(is_ybe_solution(s), "is_solution")
    report["invertible"] = is_invertible(s)
    return _require_ok(report, "is_solution")


def _algebra(args, kind: str):
    obj = io.load_json(_input(args))
    if kind == "di_leibniz":
        return io.di_leibniz_from_json(obj)
    if kind == "lie_leibniz":
        return io.lie_leibniz_from_json(obj)
    return io.constants_from_json(obj)


def verify_algebra(args):
    kind = args.kind or "leibniz"
    if kind not in ("lie", "leibniz", "di_leibniz", "lie_leibniz"):
        raise io.InputError(f"unknown algebra kind {kind!r}", "kind")
    report = _verdict(validate_algebra(kind, _algebra(args, kind)), "valid")
    report["kind"] = kind
    return _require_ok(report, "valid")


def verify_linear_averaging(args):
    kind = args.kind or "lie"
    g = io.constants_from_json(io.load_json(_input(args)))
    if not args.operator:
        raise io.InputError("give the linear map with --operator", "input")
    p = io.linear_map_from_json(io.load_json(args.operator))
    report = _verdict(is_linear_averaging(kind, g, p), "is_averaging")
    report["kind"] = kind
    return _require_ok(report, "is_averaging")


def verify_hopf_averaging(args):
    g = _group(args)
    if not args.operator:
        raise io.InputError("give the operator with --operator", "input")
    obj = io.load_json(args.operator)
    b = io.linear_map_from_json(obj) if "m" in obj else extend_operator(g, io.operator_from_json(obj))
    return _require_ok(_verdict(is_hopf_averaging(g, b), "is_hopf_averaging"), "is_hopf_averaging")


# enumerate


def enumerate_averaging_cmd(args):
    carrier = _carrier(args)
    found = enumerate_averaging(carrier, pointed_only=args.pointed_only, max_size=args.max_size or 8)
    return [io.operator_to_json(a) for a in found]


def enumerate_racks_cmd(args):
    n = args.size
    if n is None:
        raise io.InputError("give the size with --size", "input")
    guard = args.max_size or 4
    if n > guard:
        raise GuardExceeded(f"rack enumeration refused: size {n} exceeds guard --max-size {guard}", "max_size")
    return [io.magma_to_json(m) for m in enumerate_racks(n)]


def enumerate_automorphisms(args):
    guard = args.max_size or 12
    if args.group:
        return [io.operator_to_json(f) for f in automorphism_group(_group(args), max_size=guard)]
    m = io.magma_from_json(io.load_json(_input(args)))
    return [io.operator_to_json(f) for f in magma_automorphisms(m, max_size=guard)]


def enumerate_subracks(args):
    q = io.magma_from_json(io.load_json(_input(args)))
    return [{"section": [list(f.image) for f in s]} for s in enumerate_regular_subracks(q, args.max_size or 6)]


def enumerate_pairings(args):
    q = io.magma_from_json(io.load_json(_input(args)))
    return [
        io.pairing_to_json(pairing_from_subrack(q, s))
        for s in enumerate_regular_subracks(q, args.max_size or 6)
    ]


# construct


def construct_standard(args):
    kind = args.kind
    params = {}
    if kind in ("trivial", "flip"):
        if args.n is None:
            raise io.InputError(f"{kind} rack needs --n", "input")
        params["n"] = args.n
    elif kind in ("takasaki", "alexander", "conjugation"):
        params["group"] = _group(args)
        if kind == "alexander":
            params["t"] = _operator(args)
    else:
        raise io.InputError(f"unknown rack kind {kind!r}", "kind")
    return io.magma_to_json(standard_rack(kind, **params))


def construct_descendent(args):
    return io.magma_to_json(descendent_rack(_carrier(args), _operator(args)))


def construct_product(args):
    kind = args.kind or "adjoint"
    if kind == "action":
        return io.magma_to_json(product_rack("action", action=io.action_from_json(io.load_json(_input(args)))))
    if kind == "adjoint":
        return io.magma_to_json(product_rack("adjoint", group=_group(args)))
    if kind == "transported":
        return io.magma_to_json(product_rack("transported", group=_group(args), operator=_operator(args)))
    raise io.InputError(f"unknown product kind {kind!r}", "kind")


def construct_dirack(args):
    return io.dirack_to_json(dirack_from_pairing(io.pairing_from_json(io.load_json(_input(args)))))


def construct_pairing(args):
    return io.pairing_to_json(pairing_from_dirack(io.dirack_from_json(io.load_json(_input(args)))))


def construct_brace_pairing(args):
    return io.pairing_to_json(brace_to_pairing(io.brace_from_json(io.load_json(_input(args)))))


def construct_embedding(args):
    from .averaging import embed_group_rack

    g = _group(args)
    bd = io.magma_from_json(io.load_json(_input(args)))
    emb = embed_group_rack(g, bd)
    return {
        "product": io.group_to_json(emb.product),
        "operator": io.operator_to_json(emb.operator),
        "inclusion": io.operator_to_json(emb.inclusion),
    }


def construct_leibnizification(args):
    lz = leibnizification(io.di_leibniz_from_json(io.load_json(_input(args))))
    return {
        "complement": list(lz.quotient.complement),
        "bracket": io.constants_to_json(lz.bracket),
        "q": io.linear_map_to_json(lz.q),
    }


def _embedding_json(emb) -> dict:
    return {
        "ambient": io.constants_to_json(emb.ambient),
        "operator": io.linear_map_to_json(emb.operator),
        "inclusion": io.linear_map_to_json(emb.inclusion),
    }


def construct_embed_di_leibniz(args):
    return _embedding_json(embed_di_leibniz(io.di_leibniz_from_json(io.load_json(_input(args)))))


def construct_embed_lie_leibniz(args):
    return _embedding_json(embed_lie_leibniz(io.lie_leibniz_from_json(io.load_json(_input(args)))))


# check


def check_holomorph(args):
    q = io.magma_from_json(io.load_json(_input(args)))
    guard = args.max_size or 4
    if q.size > guard:
        raise GuardExceeded(f"holomorph check refused: size {q.size} exceeds guard --max-size {guard}", "max_size")
    sections = enumerate_regular_subracks(q, max_size=guard)
    pairings = [m for m in enumerate_racks(q.size) if is_rack_pairing(RackPairing(q, m))]
    from_sections = {pairing_from_subrack(q, s).blackdiamond.table for s in sections}
    round_trip = all(subrack_from_pairing(pairing_from_subrack(q, s)) == s for s in sections) and all(
        pairing_from_subrack(q, subrack_from_pairing(RackPairing(q, m))).blackdiamond == m for m in pairings
    )
    ok = len(sections) == len(pairings) and from_sections == {m.table for m in pairings} and round_trip
    return _require_ok(
        {"regular_subracks": len(sections), "rack_pairings": len(pairings), "bijection": ok}, "bijection"
    )


def check_hierarchy(args):
    q = _carrier(args)
    kmax = 2 if args.kmax is None else args.kmax
    lmax = 2 if args.lmax is None else args.lmax
    rep = power_hierarchy(q, _operator(args), kmax, lmax)
    return _require_ok(
        {"ok": rep.ok, "kmax": kmax, "lmax": lmax,
         "failures": [[name, k, l, list(w)] for name, k, l, w in rep.failures]},
        "ok",
    )


def check_graph(args):
    g = _group(args)
    a = _operator(args)
    gc = graph_check(g, a)
    avg = bool(is_averaging(g, a))
    report = {
        "is_averaging": avg,
        "graph_subrack": gc.graph_subrack,
        "transported_subrack": gc.transported_subrack,
        "agree": gc.graph_subrack == avg == gc.transported_subrack,
    }
    return _require_ok(report, "agree")


def check_ybe_iff(args):
    q = io.magma_from_json(io.load_json(_input(args)))
    ybe = bool(is_ybe_solution(braided_from_rack(q)))
    rack = is_rack(q)
    return _require_ok({"is_rack": rack, "is_solution": ybe, "agree": rack == ybe}, "agree")


def check_hopf(args):
    g = _group(args)
    a = _operator(args)
    b = extend_operator(g, a)
    hopf = bool(is_hopf_averaging(g, b))
    avg = bool(is_averaging(g, a))
    report = {
        "is_averaging": avg,
        "is_hopf_averaging": hopf,
        "restricts_back": restrict_operator(g, b) == a,
        "agree": avg == hopf,
    }
    return _require_ok(report, "agree")


def check_lambda(args):
    q = _carrier(args)
    if not isinstance(q, FiniteMagma):
        q = FiniteMagma(q.order, q.conjugation_table())
    a = _operator(args)
    cls = classify_pairing(RackPairing(q, descendent_rack(q, a)))
    report = {
        "lambda_homomorphic": cls.lambda_homomorphic,
        "lambda_criterion": lambda_criterion(q, a),
        "symmetric": cls.symmetric,
        "symmetric_criterion": symmetric_criterion(q, a),
    }
    report["agree"] = (
        report["lambda_homomorphic"] == report["lambda_criterion"]
        and report["symmetric"] == report["symmetric_criterion"]
    )
    return _require_ok(report, "agree")


# export


def export_table(args):
    return io.magma_to_json(io.magma_from_json(io.load_json(_input(args))))


def export_solution(args):
    return io.solution_to_json(braided_from_rack(io.magma_from_json(io.load_json(_input(args)))))


def export_operator_matrix(args):
    return io.linear_map_to_json(extend_operator(_group(args), _operator(args)))


COMMANDS: Dict[Tuple[str, str], Callable] = {
    ("verify", "rack"): verify_rack,
    ("verify", "group"): verify_group,
    ("verify", "action"): verify_action,
    ("verify", "averaging"): verify_averaging,
    ("verify", "pairing"): verify_pairing,
    ("verify", "group-rack"): verify_group_rack,
    ("verify", "dirack"): verify_dirack,
    ("verify", "brace"): verify_brace,
    ("verify", "solution"): verify_solution,
    ("verify", "algebra"): verify_algebra,
    ("verify", "linear-averaging"): verify_linear_averaging,
    ("verify", "hopf-averaging"): verify_hopf_averaging,
    ("enumerate", "averaging"): enumerate_averaging_cmd,
    ("enumerate", "racks"): enumerate_racks_cmd,
    ("enumerate", "automorphisms"): enumerate_automorphisms,
    ("enumerate", "regular-subracks"): enumerate_subracks,
    ("enumerate", "pairings"): enumerate_pairings,
    ("construct", "standard-rack"): construct_standard,
    ("construct", "descendent"): construct_descendent,
    ("construct", "product-rack"): construct_product,
    ("construct", "dirack"): construct_dirack,
    ("construct", "pairing"): construct_pairing,
    ("construct", "brace-pairing"): construct_brace_pairing,
    ("construct", "embedding"): construct_embedding,
    ("construct", "leibnizification"): construct_leibnizification,
    ("construct", "embed-di-leibniz"): construct_embed_di_leibniz,
    ("construct", "embed-lie-leibniz"): construct_embed_lie_leibniz,
    ("check", "holomorph-bijection"): check_holomorph,
    ("check", "hierarchy"): check_hierarchy,
    ("check", "graph"): check_graph,
    ("check", "ybe-iff"): check_ybe_iff,
    ("check", "hopf"): check_hopf,
    ("check", "lambda"): check_lambda,
    ("export", "table"): export_table,
    ("export", "braided-solution"): export_solution,
    ("export", "operator-matrix"): export_operator_matrix,
}


def build_parser() -> argparse.ArgumentParser:
    subjects = sorted({f"{v} {s}" for v, s in COMMANDS})
    parser = argparse.ArgumentParser(
        prog="avgbench",
        description="Verify and enumerate averaging operators, racks and related structures.",
        epilog="commands: " + ", ".join(subjects),
    )
    parser.add_argument("verb", choices=sorted({v for v, _ in COMMANDS}))
    parser.add_argument("subject")
    parser.add_argument("file", nargs="?", help="input JSON file (same as --input)")
    parser.add_argument("-i", "--input")
    parser.add_argument("-o", "--output")
    parser.add_argument("--rack", help="rack JSON file")
    parser.add_argument("--group", help="group JSON file")
    parser.add_argument("--operator", help="operator JSON file")
    parser.add_argument("--kind", help="construction or algebra kind")
    parser.add_argument("--n", type=int, help="size for trivial and flip racks")
    parser.add_argument("--size", type=int, help="carrier size for rack enumeration")
    parser.add_argument("--pointed-at", type=int)
    parser.add_argument("--pointed-only", action="store_true")
    parser.add_argument("--max-size", type=int, help="size guard for exhaustive searches")
    parser.add_argument("--kmax", type=int)
    parser.add_argument("--lmax", type=int)
    parser.add_argument("--format", choices=("json", "table"), default="json")
    return parser


def _render_table(obj) -> str:
    if isinstance(obj, dict) and "table" in obj:
        rows = obj["table"]
        width = max(len(str(v)) for row in rows for v in row)
        head = " " * (width + 1) + "| " + " ".join(str(y).rjust(width) for y in range(len(rows)))
        lines = [head, "-" * len(head)]
        for x, row in enumerate(rows):
            lines.append(str(x).rjust(width) + " | " + " ".join(str(v).rjust(width) for v in row))
        return "\n".join(lines)
    if isinstance(obj, dict):
        return "\n".join(f"{k}: {io.dumps(v)}" for k, v in sorted(obj.items()))
    return io.dumps(obj)


def _render(result, fmt: str) -> str:
    items: Iterable = result if isinstance(result, list) else [result]
    if fmt == "table":
        return "\n\n".join(_render_table(x) for x in items) + "\n"
    return "".join(io.dumps(x) + "\n" for x in items)


def _emit(text: str, output: Optional[str]) -> None:
    if output:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    handler = COMMANDS.get((args.verb, args.subject))
    if handler is None:
        options = sorted(s for v, s in COMMANDS if v == args.verb)
        sys.stderr.write(f"error: unknown subject {args.subject!r} for {args.verb}; choose from {', '.join(options)}\n")
        return 2
    try:
        result = handler(args)
    except Failure as failure:
        _emit(_render(failure.report, args.format), args.output)
        return 1
    except GuardExceeded as err:
        sys.stderr.write(f"error: guard exceeded: {err}\n")
        return 2
    except io.InputError as err:
        sys.stderr.write(f"error: {err}\n")
        return 2
    except StructureError as err:
        # refusals raised while computing on parsed input
        sys.stderr.write(f"error: {err}\n")
        return 1 if err.axiom not in ("shape", "range", "schema", "size", "dimension", "rational") else 2
    except (ValueError, TypeError) as err:
        sys.stderr.write(f"error: malformed input: {err}\n")
        return 2
    _emit(_render(result, args.format), args.output)
    return 0


if __name__ == "__main__":
    sys.exit(main())
