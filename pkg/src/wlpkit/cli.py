"""Command-line front end.

Exit codes: 0 success, 1 malformed input, 2 violated precondition (the
message names the hypothesis), 3 internal cross-check disagreement,
4 corpus mismatch.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .documents import InputDocument, dump_document, load_document
from .errors import CrossCheckError, PreconditionError, WlpkitError
from .graphs import (
    classify_components,
    cremona_shape,
    daonair_wlp1,
    disconnected_shortcut,
    monomial_wlp1,
)
from .incidence import (
    EquigeneratedIdeal,
    check_incidence_shape,
    facet_ideal_skeleton,
    incidence_ideal,
    incidence_matrix,
    loopgraph_incidence,
    multiplication_matrix,
    slp1_matrix,
)
from .lefschetz import slp_degree1, wlp_degree, wlp_fullrank_bound_report, wlp_report
from .linalg import full_rank_failure_primes, rank_q, smith_normal_form
from .monomial import MonomialAlgebra, squarefree_reduction, skeleton_graph, underlying_graph
from .multiplicity import (
    analytic_spread,
    failure_char_set,
    is_birational,
    last_mixed_mult,
    mixed_mult_positive,
)

EXIT_MISMATCH = 4


def _algebra(doc: InputDocument) -> MonomialAlgebra:
    if doc.kind == "complex":
        return squarefree_reduction(doc.complex)
    return MonomialAlgebra(doc.ideal)


def _complex(doc: InputDocument, what: str):
    if doc.kind == "complex":
        return doc.complex
    delta = MonomialAlgebra(doc.ideal).to_complex()
    if delta is None:
        raise PreconditionError(
            f"{what} needs a squarefree reduction A(Δ) (all squares plus squarefree generators)")
    return delta


def _require(args, name):
    value = getattr(args, name)
    if value is None:
        raise PreconditionError(f"--{name.replace('_', '-')} is required here")
    return value


def _equigenerated(doc: InputDocument) -> EquigeneratedIdeal:
    return EquigeneratedIdeal.from_monomials(doc.ideal.variables, doc.monomials)


def cmd_fvector(doc, args):
    if doc.kind == "complex":
        return {"f_vector": list(doc.complex.f_vector())}, {}
    alg = _algebra(doc)
    return {"hilbert_function": list(alg.hilbert_function())}, {}


def cmd_matrix(doc, args):
    i = _require(args, "degree")
    kind = args.kind or ("incidence" if doc.kind == "complex" else "multiplication")
    if kind == "incidence":
        m = incidence_matrix(_complex(doc, "an incidence matrix"), i)
    elif kind == "multiplication":
        m = multiplication_matrix(_algebra(doc), i)
    elif kind == "slp1":
        m = slp1_matrix(_complex(doc, "the SLP matrix"), i)
    else:
        if i != 1:
            raise PreconditionError("the loop-graph incidence matrix lives in degree 1")
        m = loopgraph_incidence(underlying_graph(_algebra(doc)))
    out = {"kind": kind, "degree": i, "matrix": m.to_json(), "rank_q": rank_q(m),
           "stochastic_degree": m.stochastic_degree}
    return out, {}


def cmd_incidence_ideal(doc, args):
    if doc.kind == "ideal" and args.degree is None:
        ideal = _equigenerated(doc)
    else:
        ideal = incidence_ideal(_complex(doc, "an incidence ideal"), _require(args, "degree"))
    return {"variables": list(ideal.variables), "generators": ideal.generator_strings(),
            "degree": ideal.degree, "incidence_shape": check_incidence_shape(ideal)}, {}


def cmd_spread(doc, args):
    checks = {}
    if args.facet_skeleton is not None:
        delta = _complex(doc, "a facet ideal")
        d = args.facet_skeleton
        ideal = facet_ideal_skeleton(delta, d)
        out = {"facet_skeleton": d}
    elif args.degree is not None:
        delta = _complex(doc, "an incidence ideal")
        i = args.degree
        ideal = incidence_ideal(delta, i)
        out = {"degree": i, "target": min(delta.f(i - 1), delta.f(i))}
        checks["rank_equals_spread"] = (
            rank_q(incidence_matrix(delta, i)) == analytic_spread(ideal))
    elif doc.kind == "ideal":
        ideal = _equigenerated(doc)
        out = {}
    else:
        raise PreconditionError("--degree or --facet-skeleton is required for a complex")
    out["analytic_spread"] = analytic_spread(ideal)
    out["nvars"] = ideal.nvars
    return out, checks


def _parse_char(text):
    if text == "all":
        return "all"
    try:
        return int(text)
    except ValueError:
        raise PreconditionError(f"--char must be 0, a prime, or 'all', got {text!r}") from None


def cmd_wlp(doc, args):
    alg = _algebra(doc)
    char = _parse_char(args.char)
    if char == "all":
        report = wlp_report(alg, mixed_mult=args.mixed_mult)
        out = report.to_json()
        if args.degree is not None:
            out["degrees"] = [r for r in out["degrees"] if r["degree"] == args.degree]
        checks = {f"degree{r['degree']}.{k}": v
                  for r in out["degrees"] for k, v in r["crosschecks"].items()}
        return out, checks
    degrees = [args.degree] if args.degree is not None else range(max(alg.socle_degree, 0))
    verdicts = [{"degree": i, "dims": [alg.dim(i), alg.dim(i + 1)],
                 "full_rank": wlp_degree(alg, i, char)} for i in degrees]
    return {"char": char, "wlp": all(v["full_rank"] for v in verdicts),
            "degrees": verdicts}, {}


def cmd_slp1(doc, args):
    res = slp_degree1(_complex(doc, "the degree-one SLP test"))
    return res.to_json(), {"rank_equals_spread": True}


def cmd_char_analysis(doc, args):
    i = _require(args, "degree")
    if doc.kind == "ideal" and not doc.ideal.is_squarefree_reduction():
        alg = _algebra(doc)
        m = multiplication_matrix(alg, i)
        snf = smith_normal_form(m)
        return {"degree": i, "dims": list(m.shape[::-1]),
                "invariant_factors": list(snf.invariant_factors),
                "failure": full_rank_failure_primes(m).to_json()}, {}
    delta = _complex(doc, "characteristic analysis")
    m = incidence_matrix(delta, i)
    snf = smith_normal_form(m)
    out = {"degree": i, "dims": [delta.f(i - 1), delta.f(i)],
           "invariant_factors": list(snf.invariant_factors),
           "failure": full_rank_failure_primes(m).to_json()}
    checks = {}
    if i >= 1 and delta.f(i - 1) <= delta.f(i):
        fs = failure_char_set(delta, i, oracle=args.oracle)
        out["failure"] = fs.to_json()
        if args.oracle:
            checks["subset_gcd_oracle"] = True
        if rank_q(m) == delta.f(i - 1):
            out["bound"] = wlp_fullrank_bound_report(delta, i).to_json()
    return out, checks


def cmd_birational(doc, args):
    if doc.kind == "ideal" and args.degree is None and len(doc.monomials) == doc.ideal.nvars:
        res = is_birational(doc.monomials)
        return {"source": "generators", "determinant": res.determinant,
                "degree": res.degree, "birational": res.birational}, {}
    alg = _algebra(doc)
    i = args.degree
    if i is None:
        square = [k for k in range(alg.socle_degree) if alg.dim(k) == alg.dim(k + 1) > 0]
        if len(square) != 1:
            raise PreconditionError(
                f"no unique degree with a square multiplication map (candidates {square}); "
                "pass --degree")
        i = square[0]
    m = multiplication_matrix(alg, i)
    if m.shape[0] != m.shape[1]:
        raise PreconditionError(f"multiplication map in degree {i} is {m.shape[0]}x{m.shape[1]}")
    if m.stochastic_degree is None:
        raise PreconditionError("rows of the multiplication matrix do not share a row sum")
    from .monomial import Monomial

    res = is_birational([Monomial(r) for r in m.matrix.rows])
    return {"source": f"multiplication matrix, degree {i}", "determinant": res.determinant,
            "degree": res.degree, "birational": res.birational}, {}


def cmd_graph_criteria(doc, args):
    checks = {}
    if doc.kind == "complex":
        delta = doc.complex
        graph = skeleton_graph(delta)
        out = {"graph": "1-skeleton", "f0": delta.f(0), "f1": delta.f(1),
               "daonair_wlp1": daonair_wlp1(delta)}
        full = rank_q(incidence_matrix(delta, 1)) == min(delta.f(0), delta.f(1))
        checks["daonair_vs_rank"] = out["daonair_wlp1"] == full
    else:
        alg = _algebra(doc)
        graph = underlying_graph(alg)
        out = {"graph": "underlying", "dim_A1": alg.dim(1), "dim_A2": alg.dim(2)}
        if alg.dim(1) <= alg.dim(2):
            out["monomial_wlp1"] = monomial_wlp1(alg)
            full = rank_q(multiplication_matrix(alg, 1)) == alg.dim(1)
            checks["monomial_wlp1_vs_rank"] = out["monomial_wlp1"] == full
        else:
            out["monomial_wlp1"] = None
    out["vertices"] = list(graph.vertices)
    out["edges"] = [list(e) for e in graph.edges]
    out["components"] = [c.to_json() for c in classify_components(graph)]
    if len(graph.vertices) <= len(graph.edges):
        out["disconnected_shortcut"] = disconnected_shortcut(graph)
    if len(graph.vertices) == len(graph.edges) and graph.vertices:
        out["cremona_shape"] = cremona_shape(graph)
    if any(v is False for v in checks.values()):
        raise CrossCheckError(f"graph criterion disagrees with rank: {checks}")
    return out, checks


def cmd_mixed_mult(doc, args):
    if doc.kind == "complex" or args.degree is not None:
        ideal = incidence_ideal(_complex(doc, "an incidence ideal"), _require(args, "degree"))
    else:
        ideal = _equigenerated(doc)
    n = ideal.nvars
    spread = analytic_spread(ideal)
    e = last_mixed_mult(ideal)
    positive = [b for b in range(n) if mixed_mult_positive(n - 1 - b, b, ideal)]
    checks = {"positivity_top_index": (e > 0) == (spread == n)}
    if not checks["positivity_top_index"]:
        raise CrossCheckError(f"e = {e} but analytic spread {spread} of {n}")
    return {"nvars": n, "degree": ideal.degree, "last_mixed_mult": e,
            "analytic_spread": spread, "positive_indices": [[n - 1 - b, b] for b in positive]}, checks


COMMANDS = {
    "fvector": cmd_fvector,
    "matrix": cmd_matrix,
    "incidence-ideal": cmd_incidence_ideal,
    "spread": cmd_spread,
    "wlp": cmd_wlp,
    "slp1": cmd_slp1,
    "char-analysis": cmd_char_analysis,
    "birational": cmd_birational,
    "graph-criteria": cmd_graph_criteria,
    "mixed-mult": cmd_mixed_mult,
}


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subparser from resetting a flag given before the subcommand
    common.add_argument("--format", choices=["json", "text"], default=argparse.SUPPRESS)
    common.add_argument("--seed", type=int, default=argparse.SUPPRESS, help=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(prog="wlpkit", parents=[common],
                                     description="Lefschetz properties of Artinian monomial algebras")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, help=help_text, parents=[common])
        p.add_argument("file")
        return p

    add("fvector", "f-vector of a complex (Hilbert function of an algebra)")
    p = add("matrix", "labeled incidence / multiplication / SLP matrix")
    p.add_argument("--degree", type=int)
    p.add_argument("--kind", choices=["incidence", "multiplication", "slp1", "loopgraph"])
    p = add("incidence-ideal", "generators of the incidence ideal")
    p.add_argument("--degree", type=int)
    p = add("spread", "analytic spread")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--degree", type=int)
    g.add_argument("--facet-skeleton", type=int)
    p = add("wlp", "weak Lefschetz verdicts")
    p.add_argument("--degree", type=int)
    p.add_argument("--char", default="0")
    p.add_argument("--mixed-mult", action="store_true",
                   help="also cross-check through mixed multiplicities")
    add("slp1", "strong Lefschetz property in degree one")
    p = add("char-analysis", "characteristics where the WLP fails in one degree")
    p.add_argument("--degree", type=int)
    p.add_argument("--oracle", action="store_true", help="cross-check with the subset-gcd formula")
    p = add("birational", "determinant test for a square monomial map")
    p.add_argument("--degree", type=int)
    add("graph-criteria", "component classification and graph criteria")
    p = add("mixed-mult", "last mixed multiplicity and positivity data")
    p.add_argument("--degree", type=int)
    p = sub.add_parser("corpus", help="run a fixture directory against its .expected sidecars",
                       parents=[common])
    p.add_argument("directory")
    return parser


def execute(argv):
    """Run one subcommand in-process; returns (payload, exit code, error message)."""
    args = build_parser().parse_args(argv)
    payload = {"command": args.command, "versions": {"wlpkit": __version__}}
    try:
        doc = load_document(args.file)
        payload["input"] = {"file": str(args.file), "document": dump_document(doc)}
        results, checks = COMMANDS[args.command](doc, args)
    except WlpkitError as exc:
        payload["error"] = str(exc)
        return payload, exc.exit_code, str(exc)
    payload["results"] = results
    payload["crosschecks"] = checks
    return payload, 0, None


def _text(value, indent=0):
    pad = "  " * indent
    if isinstance(value, dict):
        if set(value) >= {"rows", "cols", "entries"}:
            from .incidence import LabeledMatrix
            from .linalg import IntegerMatrix

            m = LabeledMatrix(tuple(value["rows"]), tuple(value["cols"]),
                              IntegerMatrix(value["entries"], len(value["cols"])))
            return "\n".join(pad + line for line in m.to_text().splitlines())
        lines = []
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        parts = []
        for v in value:
            if isinstance(v, dict):
                body = _text(v, indent + 1)
                parts.append(pad + "- " + body[len(pad) + 2:])
            else:
                parts.append(pad + json.dumps(v))
        return "\n".join(parts)
    return pad + json.dumps(value)


def render(payload, fmt):
    if fmt == "json":
        return json.dumps(payload, sort_keys=True, indent=2)
    lines = [f"command: {payload['command']}"]
    if "input" in payload:
        lines.append(f"input: {payload['input']['file']}")
    if "error" in payload:
        lines.append(f"error: {payload['error']}")
        return "\n".join(lines)
    lines.append(_text(payload["results"]))
    if payload["crosschecks"]:
        lines.append("crosschecks:")
        lines.append(_text(payload["crosschecks"], 1))
    return "\n".join(lines)


def _lookup(payload, path):
    cur = payload
    for part in path.split("."):
        if isinstance(cur, list):
            cur = cur[int(part)]
        else:
            cur = cur[part]
    return cur


def run_corpus(directory, out=None) -> int:
    """Each ``NAME.json`` fixture is checked against ``NAME.expected``.

    A sidecar holds ``{"source": ..., "checks": [{"args": [...], "ref": ...,
    "exit": 0, "expect": {"results.path": value}}]}``; the fixture path is
    appended to ``args``.
    """
    out = sys.stdout if out is None else out
    directory = Path(directory)
    failures = 0
    total = 0
    for fixture in sorted(directory.glob("*.json")):
        sidecar = fixture.with_suffix(".expected")
        if not sidecar.exists():
            print(f"SKIP {fixture.name}: no sidecar", file=out)
            continue
        data = json.loads(sidecar.read_text())
        for check in data["checks"]:
            total += 1
            argv = list(check["args"]) + [str(fixture)]
            payload, code, _ = execute(argv)
            problems = []
            want_code = check.get("exit", 0)
            if code != want_code:
                problems.append(f"exit {code} != {want_code}")
            for path, want in check.get("expect", {}).items():
                try:
                    got = _lookup(payload, path)
                except (KeyError, IndexError, TypeError, ValueError):
                    problems.append(f"{path} missing")
                    continue
                if got != want:
                    problems.append(f"{path} = {got!r}, expected {want!r}")
            status = "FAIL" if problems else "PASS"
            failures += bool(problems)
            line = f"{status} {fixture.name} {' '.join(check['args'])} [{check.get('ref', '')}]"
            if problems:
                line += ": " + "; ".join(problems)
            print(line, file=out)
    print(f"{total - failures}/{total} corpus checks passed", file=out)
    return EXIT_MISMATCH if failures else 0


def run(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    if args.command == "corpus":
        return run_corpus(args.directory)
    payload, code, err = execute(argv)
    print(render(payload, getattr(args, "format", "text")))
    if err is not None:
        print(f"wlpkit: {err}", file=sys.stderr)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
