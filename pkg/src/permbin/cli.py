"""Command-line interface: ``permbin <command> [flags]``.

Every command writes one newline-terminated document to stdout (or --out).
JSON output carries a ``header`` with the command and its flags. Exit codes:
0 success, 1 bad parameters, 2 field or workload too large.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from importlib.metadata import PackageNotFoundError, version

from . import kernels
from .binomial import (
    Binomial,
    PBFamilyParams,
    as_function_table,
    from_family,
    is_pb_mu_criterion,
    is_permutation,
)
from .canonical import (
    CanonicalTriple,
    canonical_binomial,
    canonical_form,
    classify,
    collapse,
    compute_Adn,
    compute_Gdn,
    compute_Nd,
    EquivalenceWitness,
    apply_witness_table,
    equivalent_bruteforce,
)
from .curves import build_G, diagnose, numerator_NG
from .errors import CapacityError, DomainError
from .field import FieldCtx, field_of_order, make_field
from .residue import g_orbits
from .results import ScanResult, canonical_id, scan_T19, scan_T110, verify_result


def _version() -> str:
    try:
        return version("permbin")
    except PackageNotFoundError:  # pragma: no cover
        return "0+unknown"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


# -- argument helpers


def _add_common(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--format", choices=("json", "csv", "text"), default="json")
    sp.add_argument("--out", metavar="PATH", help="write output here instead of stdout")


def _add_element(sp: argparse.ArgumentParser, name: str = "a", required: bool = True) -> None:
    g = sp.add_mutually_exclusive_group(required=required)
    g.add_argument(f"--{name}-log", type=int, metavar="K", help=f"{name} = xi^K")
    g.add_argument(f"--{name}-zero", action="store_true", help=f"{name} = 0")
    g.add_argument(f"--{name}-vec", metavar="C0,C1,...",
                   help=f"{name} by its coefficient vector, constant term first")


def _element(ctx: FieldCtx, args, name: str = "a") -> int:
    if getattr(args, f"{name}_zero"):
        return 0
    vec = getattr(args, f"{name}_vec")
    if vec is not None:
        try:
            coeffs = [int(c) for c in vec.split(",") if c.strip()]
        except ValueError:
            raise DomainError(f"--{name}-vec expects comma-separated integers, got {vec!r}")
        if len(coeffs) > ctx.m or any(not 0 <= c < ctx.p for c in coeffs):
            raise DomainError(f"--{name}-vec {vec!r} is not a vector over F_{ctx.p} of length <= {ctx.m}")
        return ctx.from_vec(coeffs)
    return ctx.xi_pow(getattr(args, f"{name}_log"))


def _parse_term(text: str) -> tuple[int, int]:
    try:
        lg, ex = text.split(":")
        return int(lg), int(ex)
    except ValueError:
        raise DomainError(f"term {text!r} is not COEFF_LOG:EXP")


def _binomial(ctx: FieldCtx, terms: list[str] | None, what: str) -> Binomial:
    if not terms or len(terms) != 2:
        raise DomainError(f"{what} needs exactly two terms COEFF_LOG:EXP")
    (la, m0), (lb, n0) = (_parse_term(t) for t in terms)
    return Binomial.from_logs(ctx, la, m0, lb, n0)


def _range(lo: int | None, hi: int | None, default_hi: int) -> range:
    return range(lo if lo is not None else 1, (hi if hi is not None else default_hi) + 1)


def _binomial_brief(f: Binomial) -> dict:
    la, lb = f.logs()
    return {"terms": [{"coeff_log": la, "exp": f.m0}, {"coeff_log": lb, "exp": f.n0}]}


# -- commands; each returns (result dict, rows for csv or None)


def cmd_field_info(args):
    ctx = make_field(args.p, args.m)
    res = {
        "p": ctx.p,
        "m": ctx.m,
        "order": ctx.order,
        "modulus": list(ctx.modulus),
        "xi": ctx.vec(ctx.xi),
        "has_tables": ctx.has_tables,
    }
    return res, None


def cmd_test_pb(args):
    ctx = field_of_order(args.q**args.e)
    params = PBFamilyParams(args.q, args.e, args.n, args.d, _element(ctx, args))
    why = params.admissibility_failure()
    if why:
        raise DomainError(f"inadmissible parameters: {why}")
    res = {}
    if args.method in ("brute", "both"):
        res["brute"] = is_permutation(from_family(params))
    if args.method in ("mu", "both"):
        res["mu"] = is_pb_mu_criterion(params)
    return res, None


def _check_divides(ctx: FieldCtx, d: int) -> None:
    if d < 1 or ctx.qm1 % d:
        raise DomainError(f"d = {d} does not divide q-1 = {ctx.qm1}")


def cmd_nd(args):
    ctx = make_field(args.p, args.m)
    _check_divides(ctx, args.d)
    orbits = [list(o) for o in g_orbits(ctx.qm1, args.d)]
    res = {"N_d": compute_Nd(ctx, args.d), "orbits": orbits}
    return res, [{"n": n} for n in res["N_d"]]


def cmd_gdn(args):
    ctx = make_field(args.p, args.m)
    res = {"G_dn": compute_Gdn(ctx, args.d, args.n)}
    return res, [{"g": g} for g in res["G_dn"]]


def cmd_adn(args):
    ctx = make_field(args.p, args.m)
    res = {"A_dn": compute_Adn(ctx, args.d, args.n)}
    return res, [{"a_log": e} for e in res["A_dn"]]


def _load_binomial_file(path: str) -> Binomial:
    with open(path) as fh:
        return Binomial.from_json(json.load(fh))


def cmd_canonical(args):
    ctx = field_of_order(args.q)
    f = _load_binomial_file(args.from_file) if args.from_file else _binomial(ctx, args.term, "--term")
    if f.ctx.key != ctx.key:
        raise DomainError("binomial file is over a different field")
    triple, chain = canonical_form(f)
    res = {
        "binomial": _binomial_brief(f),
        "is_pb": is_permutation(f) if ctx.order <= (1 << 16) else None,
        "triple": triple.to_json(),
        "canonical": _binomial_brief(canonical_binomial(ctx, triple)),
        "chain": [s.to_json() for s in chain],
        "witness": collapse(ctx, chain).to_json(),
    }
    return res, [triple.to_json()]


def cmd_classify(args):
    ctx = field_of_order(args.q)
    records = []
    counts: dict[CanonicalTriple, int] = {}
    for f, triple, chain in classify(ctx):
        counts[triple] = counts.get(triple, 0) + 1
        records.append({"binomial": f.to_json(), "triple": triple.to_json(),
                        "witness": collapse(ctx, chain).to_json()})
    res = {"field": ctx.to_json(), "pb_count": len(records), "class_count": len(counts),
           "_records": records}
    rows = [{**t.to_json(), "count": c} for t, c in sorted(counts.items())]
    return res, rows


def _equiv_pair(f: Binomial, g: Binomial, oracle: bool) -> dict:
    tf, _ = canonical_form(f)
    tg, _ = canonical_form(g)
    res = {"equivalent": tf == tg, "triple_f": tf.to_json(), "triple_g": tg.to_json()}
    if oracle:
        w = equivalent_bruteforce(f, g)
        res["oracle"] = w is not None
        res["oracle_witness"] = w.to_json() if w else None
    return res


def _read_documents(path: str) -> list[dict]:
    with open(path) as fh:
        text = fh.read()
    try:
        return [json.loads(text)]
    except json.JSONDecodeError:
        return [json.loads(line) for line in text.splitlines() if line.strip()]


def cmd_equiv(args):
    if args.from_file:
        docs = _read_documents(args.from_file)
        if any("triple" in d for d in docs):
            return _check_classification([d for d in docs if "triple" in d], args.oracle), None
        doc = docs[0]
        f, g = Binomial.from_json(doc["f"]), Binomial.from_json(doc["g"])
    else:
        if args.q is None:
            raise DomainError("--q is required unless --from-file is given")
        ctx = field_of_order(args.q)
        f, g = _binomial(ctx, args.f, "--f"), _binomial(ctx, args.g, "--g")
    return _equiv_pair(f, g, args.oracle), None


def _check_classification(records: list[dict], oracle: bool) -> dict:
    """Re-derive every triple of a classify run and replay its witness; with
    ``oracle`` also confirm the classes by exhaustive search."""
    bad = []
    firsts: dict[CanonicalTriple, Binomial] = {}
    for rec in records:
        f = Binomial.from_json(rec["binomial"])
        ctx = f.ctx
        triple = CanonicalTriple.from_json(rec["triple"])
        got, _ = canonical_form(f)
        w = rec.get("witness")
        replay_ok = True
        if w is not None:
            wit = EquivalenceWitness(int(w["u_log"]), int(w["v_log"]), int(w["s"]), int(w["i"]))
            target = as_function_table(canonical_binomial(ctx, triple))
            replay_ok = apply_witness_table(ctx, as_function_table(f), wit) == target
        if got != triple or not replay_ok:
            bad.append({"binomial": rec["binomial"]["terms"], "recorded": triple.to_json(),
                        "computed": got.to_json(), "replay_ok": replay_ok})
            continue
        rep = firsts.setdefault(triple, f)
        if oracle and rep is not f and equivalent_bruteforce(rep, f) is None:
            bad.append({"binomial": rec["binomial"]["terms"], "recorded": triple.to_json(),
                        "oracle": "not equivalent to the first member of its class"})
    if oracle:
        reps = sorted(firsts.items())
        for i in range(len(reps)):
            for j in range(i + 1, len(reps)):
                if equivalent_bruteforce(reps[i][1], reps[j][1]) is not None:
                    bad.append({"classes": [reps[i][0].to_json(), reps[j][0].to_json()],
                                "oracle": "distinct triples are equivalent"})
    return {"checked": len(records), "classes": len(firsts), "violations": bad,
            "consistent": not bad}


def cmd_curve(args):
    ctx = field_of_order(args.q**2)
    params = PBFamilyParams(args.q, 2, args.n, args.d, _element(ctx, args))
    gmap = build_G(params)
    N = numerator_NG(gmap)
    diag = diagnose(params, count_points=args.count_points and not args.mu_only)
    res = {
        "P": [ctx.dlog(c) if c else None for c in gmap.P],
        "Q": [ctx.dlog(c) if c else None for c in gmap.Q],
        "degG": gmap.degG,
        "N": N.to_json()["terms"],
        "diagnostics": diag.to_json(),
    }
    if args.mu_only:
        res["diagnostics"]["affine_count"] = None
    rows = [{"i": t["i"], "j": t["j"], "coeff_log": t["coeff_log"]} for t in res["N"]]
    return res, rows


def cmd_scan(args):
    common = dict(method=args.method, workers=args.workers, diagnostics=not args.no_diagnostics,
                  use_cache=args.cache)
    if args.workers < 1:
        raise DomainError("--workers must be at least 1")
    qs = args.q or []
    if not qs:
        raise DomainError("scan needs at least one --q")
    parts = []
    nr = (lambda q: _range(args.n_min, args.n_max, q * q - 1))
    if args.family in ("t19", "all"):
        for q in qs:
            if args.family == "all" and q % 2:
                continue
            parts.append(scan_T19([q], nr(q), **common))
    if args.family in ("t110", "all"):
        for q in qs:
            parts.append(scan_T110([q], nr(q), args.d, gcd_mode=args.gcd_mode, **common))
    timing = not args.no_timing
    records = [r for p in parts for r in p.records]
    summary = [row for p in parts for row in p.summary]
    violations = [v for p in parts for v in p.violations]
    if args.summary:
        with open(args.summary, "w") as fh:
            fh.write(ScanResult("", [], summary, []).csv(timing))
    res = {
        "positives": len(records),
        "tested": sum(r["count_tested"] for r in summary),
        "violations": violations,
        "_records": [r.to_json(timing) for r in records],
        "_summary": summary,
        "_timing": timing,
    }
    return res, None


def cmd_verify(args):
    rep = verify_result(canonical_id(args.result), args.q, args.e)
    return rep.to_json(timing=not args.no_timing), None


# -- output


def _header(args) -> dict:
    flags = {k: v for k, v in sorted(vars(args).items()) if k not in ("command", "func", "out")}
    return {"command": args.command, "flags": flags, "version": _version()}


def _render(args, res: dict, rows) -> str:
    fmt = args.format
    if args.command == "scan":
        return _render_scan(args, res)
    if args.command == "classify" and fmt == "json":
        head = {"header": _header(args), **{k: v for k, v in res.items() if not k.startswith("_")}}
        lines = [json.dumps(head, separators=(",", ":"))]
        lines += [json.dumps(r, separators=(",", ":")) for r in res["_records"]]
        return "\n".join(lines) + "\n"
    res = {k: v for k, v in res.items() if not k.startswith("_")}
    if fmt == "json":
        return json.dumps({"header": _header(args), **res}, separators=(",", ":")) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        if rows is None:
            rows = [{"key": k, "value": json.dumps(v, separators=(",", ":"))} for k, v in res.items()]
        if rows:
            w = csv.DictWriter(buf, fieldnames=list(rows[0]), lineterminator="\n")
            w.writeheader()
            w.writerows(rows)
        return buf.getvalue() or "\n"
    lines = [f"# permbin {args.command}"]
    lines += [f"{k}: {json.dumps(v, separators=(',', ':'))}" for k, v in res.items()]
    return "\n".join(lines) + "\n"


def _render_scan(args, res: dict) -> str:
    timing = res["_timing"]
    if args.format == "json":
        head = json.dumps({"header": _header(args)}, separators=(",", ":"))
        body = "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in res["_records"])
        return head + "\n" + body
    if args.format == "csv":
        return ScanResult("", [], res["_summary"], []).csv(timing)
    lines = [f"# permbin scan family={args.family}",
             f"tested: {res['tested']}", f"positives: {res['positives']}",
             f"violations: {len(res['violations'])}"]
    lines += [f"  {v}" for v in res["violations"]]
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="permbin", description="Permutation binomials over finite fields.")
    ap.add_argument("--version", action="version", version=f"permbin {_version()} ({kernels.BACKEND})")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = sub.add_parser("field-info", help="deterministic construction of F_{p^m}")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--m", type=int, default=1)
    sp.set_defaults(func=cmd_field_info)

    sp = sub.add_parser("test-pb", help="is X^n (X^{d(q-1)} + a) a PB of F_{q^e}?")
    for f in ("q", "n", "d"):
        sp.add_argument(f"--{f}", type=int, required=True)
    sp.add_argument("--e", type=int, default=2)
    _add_element(sp)
    sp.add_argument("--method", choices=("brute", "mu", "both"), default="both")
    sp.set_defaults(func=cmd_test_pb)

    for name, func, needs_n in (("nd", cmd_nd, False), ("gdn", cmd_gdn, True), ("adn", cmd_adn, True)):
        sp = sub.add_parser(name, help=f"{name} for F_{{p^m}}")
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--m", type=int, default=1)
        sp.add_argument("--d", type=int, required=True)
        if needs_n:
            sp.add_argument("--n", type=int, required=True)
        sp.set_defaults(func=func)

    sp = sub.add_parser("canonical", help="canonical triple of a binomial over F_q")
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--term", action="append", metavar="LOG:EXP", help="give twice")
    sp.add_argument("--from-file", metavar="PATH", help="binomial JSON")
    sp.set_defaults(func=cmd_canonical)

    sp = sub.add_parser("classify", help="all PBs of F_q grouped by canonical triple")
    sp.add_argument("--q", type=int, required=True)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("equiv", help="are two binomials equivalent?")
    sp.add_argument("--q", type=int)
    sp.add_argument("--f", nargs=2, metavar="LOG:EXP")
    sp.add_argument("--g", nargs=2, metavar="LOG:EXP")
    sp.add_argument("--from-file", metavar="PATH", help="{field, f, g} JSON or classify output")
    sp.add_argument("--oracle", action="store_true", help="also search transformations exhaustively")
    sp.set_defaults(func=cmd_equiv)

    sp = sub.add_parser("curve", help="G = P/Q, N(G) and point counts")
    for f in ("q", "n", "d"):
        sp.add_argument(f"--{f}", type=int, required=True)
    _add_element(sp)
    sp.add_argument("--count-points", action="store_true", help="count affine zeros over F_{q^2}")
    sp.add_argument("--mu-only", action="store_true", help="count only on mu_{q+1}")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("scan", help="PB search; JSON lines of positives")
    sp.add_argument("--family", choices=("t19", "t110", "all"), required=True)
    sp.add_argument("--q", type=int, nargs="+")
    sp.add_argument("--n-min", type=int)
    sp.add_argument("--n-max", type=int)
    sp.add_argument("--d", type=int, nargs="+", help="t110 only; default: divisors of q+1")
    sp.add_argument("--gcd-mode", action="store_true", help="allow any d, normalize gcd(n, d)")
    sp.add_argument("--method", choices=("auto", "brute", "criterion", "both"), default="auto")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--summary", metavar="PATH", help="write the per-slice CSV summary here")
    sp.add_argument("--no-timing", action="store_true", help="blank out timing fields")
    sp.add_argument("--no-diagnostics", action="store_true")
    sp.add_argument("--cache", action="store_true", help="reuse slice results from the cache")
    sp.set_defaults(func=cmd_scan)

    sp = sub.add_parser("verify", help="check a known result against brute force")
    sp.add_argument("--result", required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--e", type=int, default=2)
    sp.add_argument("--no-timing", action="store_true")
    sp.set_defaults(func=cmd_verify)

    for sp in sub.choices.values():
        _add_common(sp)
    return ap


def run(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        res, rows = args.func(args)
        text = _render(args, res, rows)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(text)
        else:
            (stdout or sys.stdout).write(text)
        return 0
    except UsageError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=stderr)
        return 2
    except (DomainError, ValueError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
