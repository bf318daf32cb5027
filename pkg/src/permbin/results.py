"""Known results on f = X^n (X^{d(q-1)} + a) as checkable predicates, plus scans.

Every predicate returns a :class:`Verdict`: the PB status the result
asserts at a parameter point, or an abstention when the point lies outside
the result's hypothesis. Abstaining is not the same as answering false.

Scans walk (q, n, d) slices, test every admissible ``a`` and keep only the
positives (points where f is a PB) together with one summary row per slice.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Iterable

from . import cache, kernels
from .binomial import BRUTE_LIMIT, PBFamilyParams, from_family, is_permutation
from .curves import CurveDiagnostics, diagnose
from .errors import CapacityError, DomainError
from .field import FieldCtx, field_of_order, prime_power

RESULT_IDS = ("R1.1", "R1.2", "R1.3", "R1.4", "R1.5", "R1.6", "R1.7", "T1.9", "T1.10")


@dataclass(frozen=True)
class Verdict:
    value: bool | None
    note: str = ""

    @property
    def abstain(self) -> bool:
        return self.value is None

    def to_json(self):
        return "abstain" if self.value is None else self.value


def _abstain(note: str) -> Verdict:
    return Verdict(None, note)


def _is_pow2(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


def _norm_q1(ctx: FieldCtx, q: int, a: int) -> int:
    return ctx.pow(a, q + 1)


def _gate(q: int, e: int, n: int, d: int, a: int) -> tuple[FieldCtx, str | None]:
    """Field plus the reason the point is outside every result (None if fine)."""
    params = PBFamilyParams(q, e, n, d, a)
    ctx = params.ctx
    if not 0 <= a < ctx.order:
        raise DomainError(f"{a} is not an element code of F_{ctx.order}")
    why = params.admissibility_failure()
    return ctx, (f"inadmissible: {why}" if why else None)


def _field_int(ctx: FieldCtx, k: int) -> int:
    return ctx.from_int(k)


def predicate_R11(q: int, n: int, d: int, a: int, e: int = 2) -> Verdict:
    """a^{q+1} = 1: PB iff gcd(n, q-1) = 1, gcd(n-d, q+1) = 1 and
    (-a)^{(q+1)/gcd(q+1, d)} != 1."""
    if e != 2:
        return _abstain("e != 2")
    ctx, why = _gate(q, e, n, d, a)
    if why:
        return _abstain(why)
    if _norm_q1(ctx, q, a) != 1:
        return _abstain("a^(q+1) != 1")
    ok = (math.gcd(n, q - 1) == 1 and math.gcd(n - d, q + 1) == 1
          and ctx.pow(ctx.neg(a), (q + 1) // math.gcd(q + 1, d)) != 1)
    return Verdict(ok)


def predicate_R12(q: int, n: int, d: int, a: int, e: int = 2) -> Verdict:
    """(n, d) = (1, 2), a^{q+1} != 1: PB iff q odd and (-a)^{(q+1)/2} = 3."""
    if e != 2 or (n, d) != (1, 2):
        return _abstain("needs e = 2, n = 1, d = 2")
    ctx, why = _gate(q, e, n, d, a)
    if why:
        return _abstain(why)
    if _norm_q1(ctx, q, a) == 1:
        return _abstain("a^(q+1) = 1")
    if q % 2 == 0:
        return Verdict(False)
    return Verdict(ctx.pow(ctx.neg(a), (q + 1) // 2) == _field_int(ctx, 3))


def predicate_R13(q: int, n: int, d: int, a: int, e: int = 2) -> Verdict:
    """Not a PB for n = 1, d > 2 once q is large relative to d. No explicit
    bound is known, so this never asserts."""
    if e != 2 or n != 1 or d <= 2:
        return _abstain("needs e = 2, n = 1, d > 2")
    ctx, why = _gate(q, e, n, d, a)
    if why:
        return _abstain(why)
    if _norm_q1(ctx, q, a) == 1:
        return _abstain("a^(q+1) = 1")
    return _abstain("validity region has no explicit bound")


def predicate_R14(q: int, n: int, d: int, a: int, e: int = 2) -> Verdict:
    """(n, d) = (3, 2), a^{q+1} != 1: PB iff q odd, q = -1 mod 3 and
    (-a)^{(q+1)/2} = 1/3."""
    if e != 2 or (n, d) != (3, 2):
        return _abstain("needs e = 2, n = 3, d = 2")
    ctx, why = _gate(q, e, n, d, a)
    if why:
        return _abstain(why)
    if _norm_q1(ctx, q, a) == 1:
        return _abstain("a^(q+1) = 1")
    if ctx.p == 3:
        return Verdict(False, "3 = 0 in characteristic 3, so 1/3 is undefined")
    if q % 2 == 0 or q % 3 != 2:
        return Verdict(False)
    third = ctx.inv(_field_int(ctx, 3))
    return Verdict(ctx.pow(ctx.neg(a), (q + 1) // 2) == third)


def predicate_R15(q: int, n: int, d: int, a: int, e: int = 2) -> Verdict:
    """q = 2^{2m}, d = 3: PB iff gcd(n, q-1) = 1, n = 3 mod q+1, a^{q+1} != 1."""
    p, m = prime_power(q)
    if e != 2 or d != 3 or p != 2 or m % 2:
        return _abstain("needs e = 2, d = 3, q an even power of 2")
    ctx, why = _gate(q, e, n, d, a)
    if why:
        return _abstain(why)
    return Verdict(math.gcd(n, q - 1) == 1 and n % (q + 1) == 3 % (q + 1)
                   and _norm_q1(ctx, q, a) != 1)


def predicate_R16(q: int, n: int, d: int, a: int, e: int = 2) -> Verdict:
    """d = 1: PB iff gcd(n, q-1) = 1, n = 1 mod q+1, a^{q+1} != 1."""
    if e != 2 or d != 1:
        return _abstain("needs e = 2, d = 1")
    ctx, why = _gate(q, e, n, d, a)
    if why:
        return _abstain(why)
    return Verdict(math.gcd(n, q - 1) == 1 and n % (q + 1) == 1 % (q + 1)
                   and _norm_q1(ctx, q, a) != 1)


def r17_covered(q: int, e: int) -> bool:
    p, _ = prime_power(q)
    return e in (2, 3, 4) or (e in (5, 6) and q == p)


def predicate_R17(q: int, e: int, n: int, a: int, d: int = 1) -> Verdict:
    """If f (d = 1, n < q^e - q) is a PB then f agrees with X^{nq^h} + aX^n
    on the field for some h > 0. True iff such h is found; non-PBs abstain."""
    if d != 1 or e < 2 or not r17_covered(q, e):
        return _abstain("needs d = 1 and a covered (q, e)")
    if n >= q**e - q:
        return _abstain("needs n < q^e - q")
    ctx, why = _gate(q, e, n, d, a)
    if why:
        return _abstain(why)
    f = from_family(PBFamilyParams(q, e, n, d, a))
    if not is_permutation(f):
        return _abstain("not a PB")
    be = kernels.active
    la, lb = f.logs()
    target = be.table_logs(ctx, la, f.m0, lb, f.n0)
    _, m = prime_power(q)
    lga = ctx.dlog(a)
    for h in range(1, e * m):
        if be.table_logs(ctx, 0, n * q**h, lga, n) == target:
            return Verdict(True, f"h = {h}")
    return Verdict(False)


def validity_bound_T19(n: int) -> int:
    return (2 * max(n, 6 - n)) ** 4


def validity_bound_T110(n: int, d: int) -> int:
    return (2 * max(n, 2 * d - n)) ** 4


def predicate_T19(q: int, n: int, d: int, a: int, e: int = 2) -> Verdict:
    """q = 2^m, d = 3, a^{q+1} != 1, q >= (2 max{n, 6-n})^4: not a PB."""
    p, _ = prime_power(q)
    if e != 2 or d != 3 or p != 2:
        return _abstain("needs e = 2, d = 3, q a power of 2")
    ctx, why = _gate(q, e, n, d, a)
    if why:
        return _abstain(why)
    if _norm_q1(ctx, q, a) == 1:
        return _abstain("a^(q+1) = 1")
    if q < validity_bound_T19(n):
        return _abstain("outside the validity region")
    return Verdict(False)


def t110_conditions(q: int, n: int, d: int) -> list[str]:
    """Which of the three parameter conditions hold at (q, n, d)."""
    out = []
    if d - n > 1 and _is_pow2(math.gcd(d, n + 1)):
        out.append("i")
    if d + 2 <= n < 2 * d and _is_pow2(math.gcd(d, n - 1)):
        out.append("ii")
    if n >= 2 * d and _is_pow2(math.gcd(d, n - 1)) and math.gcd(n - d, q - 1) == 1:
        out.append("iii")
    return out


def predicate_T110(q: int, n: int, d: int, a: int, e: int = 2, gcd_mode: bool = False) -> Verdict:
    """d >= 2 dividing q+1 (or gcd(n, d) = 1 with ``gcd_mode``), a^{q+1} != 1,
    one of the three conditions, q >= (2 max{n, 2d-n})^4: not a PB."""
    if e != 2 or d < 2:
        return _abstain("needs e = 2, d >= 2")
    if not ((q + 1) % d == 0 or (gcd_mode and math.gcd(n, d) == 1)):
        return _abstain("needs d | q+1" + (" or gcd(n, d) = 1" if gcd_mode else ""))
    ctx, why = _gate(q, e, n, d, a)
    if why:
        return _abstain(why)
    if _norm_q1(ctx, q, a) == 1:
        return _abstain("a^(q+1) = 1")
    if not t110_conditions(q, n, d):
        return _abstain("none of the conditions (i)-(iii) holds")
    if q < validity_bound_T110(n, d):
        return _abstain("outside the validity region")
    return Verdict(False)


PREDICATES: dict[str, Callable[[PBFamilyParams], Verdict]] = {
    "R1.1": lambda P: predicate_R11(P.q, P.n, P.d, P.a, P.e),
    "R1.2": lambda P: predicate_R12(P.q, P.n, P.d, P.a, P.e),
    "R1.3": lambda P: predicate_R13(P.q, P.n, P.d, P.a, P.e),
    "R1.4": lambda P: predicate_R14(P.q, P.n, P.d, P.a, P.e),
    "R1.5": lambda P: predicate_R15(P.q, P.n, P.d, P.a, P.e),
    "R1.6": lambda P: predicate_R16(P.q, P.n, P.d, P.a, P.e),
    "R1.7": lambda P: predicate_R17(P.q, P.e, P.n, P.a, P.d),
    "T1.9": lambda P: predicate_T19(P.q, P.n, P.d, P.a, P.e),
    "T1.10": lambda P: predicate_T110(P.q, P.n, P.d, P.a, P.e),
}


def evaluate_predicates(params: PBFamilyParams) -> dict[str, Verdict]:
    out = {}
    for rid, pred in PREDICATES.items():
        try:
            out[rid] = pred(params)
        except CapacityError as exc:
            out[rid] = _abstain(f"capacity: {exc}")
    return out


def canonical_id(rid: str) -> str:
    """Accept 'r1.6', 'R16', 't1.10' and the like."""
    key = rid.strip().upper().replace(".", "")
    for r in RESULT_IDS:
        if r.replace(".", "") == key:
            return r
    raise DomainError(f"unknown result id {rid!r}; expected one of {', '.join(RESULT_IDS)}")


# -- gcd normalization


def gcd_normalization(q: int, n: int, d: int) -> tuple[int, int, int]:
    """(n/delta, d/delta, delta') with delta = gcd(n, d) and
    delta * delta' = 1 mod q^2-1."""
    delta = math.gcd(n, d)
    Qm1 = q * q - 1
    if math.gcd(delta, Qm1) != 1:
        raise DomainError(f"gcd(n, d) = {delta} is not a unit mod q^2-1")
    return n // delta, d // delta, pow(delta, -1, Qm1) if Qm1 > 1 else 1


def normalization_agrees(params: PBFamilyParams) -> bool:
    """Whether f(X^{delta'}) and f_{q,2,n/delta,d/delta,a} agree as functions."""
    q, n, d = params.q, params.n, params.d
    n2, d2, dinv = gcd_normalization(q, n, d)
    ctx = params.ctx
    la = ctx.dlog(params.a)
    be = kernels.active
    lhs = be.table_logs(ctx, 0, (n + d * (q - 1)) * dinv, la, n * dinv)
    rhs = be.table_logs(ctx, 0, n2 + d2 * (q - 1), la, n2)
    return lhs == rhs


# -- brute-force agreement


def _brute_flags(ctx: FieldCtx, q: int, n: int, d: int, las: list[int]) -> list[bool]:
    if ctx.order > BRUTE_LIMIT:
        raise CapacityError(f"F_{ctx.order} exceeds the enumeration cap {BRUTE_LIMIT}")
    if not las:
        return []
    return kernels.active.perm_flags(ctx, n + d * (q - 1), n, [0] * len(las), las)


def _criterion_flags(ctx: FieldCtx, q: int, n: int, d: int, las: list[int]) -> list[bool]:
    if math.gcd(n, d * (q - 1)) != 1 or not las:
        return [False] * len(las)
    return kernels.active.mu_flags(ctx, q, n, d, las)


@dataclass
class VerifyReport:
    result: str
    q: int
    e: int
    tested: int = 0
    agreed: int = 0
    abstained: int = 0
    positives: int = 0
    mismatches: list[dict] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self, timing: bool = True) -> dict:
        return {
            "result": self.result,
            "q": self.q,
            "e": self.e,
            "tested": self.tested,
            "agreed": self.agreed,
            "abstained": self.abstained,
            "positives": self.positives,
            "mismatches": self.mismatches,
            "seconds": round(self.seconds, 6) if timing else None,
        }


def _verify_domain(rid: str, q: int, e: int) -> Iterable[tuple[int, int, list[int]]]:
    """(n, d, a_logs) slices covering the in-hypothesis points of a result."""
    Q = q**e
    Qm1 = Q - 1
    all_a = list(range(Qm1))
    # a^{q+1} = 1 exactly when (q-1) | log a (e = 2)
    unit_norm = [k for k in all_a if k % (q - 1) == 0]
    other = [k for k in all_a if k % (q - 1) != 0]
    if rid == "R1.1":
        for n in range(1, Qm1 + 1):
            for d in range(1, q + 1):
                yield n, d, unit_norm
    elif rid == "R1.2":
        yield 1, 2, other
    elif rid == "R1.3":
        for d in range(3, q + 1):
            yield 1, d, other
    elif rid == "R1.4":
        yield 3, 2, other
    elif rid in ("R1.5", "T1.9"):
        for n in range(1, Qm1 + 1):
            yield n, 3, all_a if rid == "R1.5" else other
    elif rid == "R1.6":
        for n in range(1, Qm1 + 1):
            yield n, 1, all_a
    elif rid == "R1.7":
        for n in range(1, Q - q):
            yield n, 1, all_a
    elif rid == "T1.10":
        for d in range(2, q + 2):
            if (q + 1) % d == 0:
                for n in range(1, Qm1 + 1):
                    yield n, d, other


def verify_result(rid: str, q: int, e: int = 2) -> VerifyReport:
    """Compare a predicate with brute-force PB testing on its hypothesis set."""
    rid = canonical_id(rid)
    if e != 2 and rid != "R1.7":
        raise DomainError(f"{rid} is stated for e = 2")
    ctx = field_of_order(q**e)
    if ctx.order > BRUTE_LIMIT:
        raise CapacityError(f"F_{ctx.order} exceeds the enumeration cap {BRUTE_LIMIT}")
    pred = PREDICATES[rid]
    rep = VerifyReport(rid, q, e)
    t0 = time.perf_counter()
    for n, d, las in _verify_domain(rid, q, e):
        if not PBFamilyParams(q, e, n, d, 1).admissible():
            continue
        truth = _brute_flags(ctx, q, n, d, las)
        for la, is_pb in zip(las, truth):
            v = pred(PBFamilyParams(q, e, n, d, ctx.xi_pow(la)))
            if v.abstain:
                rep.abstained += 1
                continue
            rep.tested += 1
            rep.positives += is_pb
            # R1.7 is structural: its verdict is about PBs only, and must be true
            expected = True if rid == "R1.7" else is_pb
            if v.value == expected:
                rep.agreed += 1
            else:
                rep.mismatches.append({"n": n, "d": d, "a_log": la,
                                       "verdict": v.value, "is_pb_brute": is_pb})
    rep.seconds = time.perf_counter() - t0
    return rep


# -- scans


@dataclass
class ScanRecord:
    q: int
    e: int
    n: int
    d: int
    a_log: int
    is_pb_brute: bool | None
    is_pb_criterion: bool | None
    predicate_verdicts: dict[str, object]
    diagnostics: CurveDiagnostics | dict | None = None
    conditions: list[str] = field(default_factory=list)
    normalization: dict | None = None
    elapsed: float | None = None

    def to_json(self, timing: bool = True) -> dict:
        diag = self.diagnostics
        if isinstance(diag, CurveDiagnostics):
            diag = diag.to_json()
        return {
            "q": self.q,
            "e": self.e,
            "n": self.n,
            "d": self.d,
            "a_log": self.a_log,
            "is_pb_brute": self.is_pb_brute,
            "is_pb_criterion": self.is_pb_criterion,
            "predicate_verdicts": self.predicate_verdicts,
            "diagnostics": diag,
            "conditions": self.conditions,
            "normalization": self.normalization,
            "elapsed": (round(self.elapsed, 6) if self.elapsed is not None else None) if timing else None,
        }

    @staticmethod
    def from_json(obj: dict) -> "ScanRecord":
        return ScanRecord(**{k: obj.get(k) for k in (
            "q", "e", "n", "d", "a_log", "is_pb_brute", "is_pb_criterion",
            "predicate_verdicts", "diagnostics")},
            conditions=obj.get("conditions") or [], normalization=obj.get("normalization"),
            elapsed=obj.get("elapsed"))

    @property
    def is_pb(self) -> bool:
        return bool(self.is_pb_brute if self.is_pb_brute is not None else self.is_pb_criterion)


SUMMARY_COLUMNS = ("q", "e", "n", "d", "count_pb", "count_tested", "seconds")


@dataclass
class ScanResult:
    family: str
    records: list[ScanRecord]
    summary: list[dict]
    violations: list[str]

    def jsonl(self, timing: bool = True) -> str:
        return "".join(json.dumps(r.to_json(timing), separators=(",", ":")) + "\n"
                       for r in self.records)

    def csv(self, timing: bool = True) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(SUMMARY_COLUMNS)
        for row in self.summary:
            w.writerow([row[c] if (c != "seconds" or timing) else "" for c in SUMMARY_COLUMNS])
        return buf.getvalue()

    @property
    def positives(self) -> int:
        return len(self.records)


@dataclass(frozen=True)
class _Slice:
    family: str
    q: int
    n: int
    d: int
    method: str
    gcd_mode: bool
    diagnostics: bool
    use_cache: bool


def _run_slice(task: _Slice) -> tuple[list[dict], dict, list[str]]:
    q, n, d = task.q, task.n, task.d
    ctx = field_of_order(q * q)
    key = {"family": task.family, "q": q, "n": n, "d": d, "method": task.method,
           "gcd_mode": task.gcd_mode, "diagnostics": task.diagnostics, "v": 1}
    if task.use_cache:
        hit = cache.load_slice(ctx.to_json(), key)
        if hit is not None:
            return hit["records"], hit["summary"], hit["violations"]
    t0 = time.perf_counter()
    records: list[dict] = []
    violations: list[str] = []
    summary = {"q": q, "e": 2, "n": n, "d": d, "count_pb": 0, "count_tested": 0}
    if PBFamilyParams(q, 2, n, d, 1).admissible():
        las = [k for k in range(ctx.qm1) if k % (q - 1) != 0]
        brute = crit = None
        use_brute = task.method in ("brute", "both") or (task.method == "auto" and ctx.order <= BRUTE_LIMIT)
        use_crit = task.method in ("criterion", "both") or (task.method == "auto" and (q + 1) % d == 0)
        if task.method == "criterion" and (q + 1) % d:
            raise DomainError(f"the mu criterion needs d | q+1 (d = {d}, q = {q})")
        if use_brute:
            brute = _brute_flags(ctx, q, n, d, las)
        if use_crit and (q + 1) % d == 0:
            crit = _criterion_flags(ctx, q, n, d, las)
        summary["count_tested"] = len(las)
        conds, norm = [], None
        if task.family == "t110":
            nn, dd = n, d
            if task.gcd_mode and math.gcd(n, d) > 1:
                try:
                    nn, dd, dinv = gcd_normalization(q, n, d)
                    norm = {"n": nn, "d": dd, "delta_inv": dinv}
                except DomainError:
                    norm = {"error": "gcd(n, d) not a unit mod q^2-1"}
            conds = t110_conditions(q, nn, dd) if norm is None or "error" not in norm else []
        for i, la in enumerate(las):
            b = brute[i] if brute is not None else None
            c = crit[i] if crit is not None else None
            if b is not None and c is not None and b != c:
                violations.append(f"criterion mismatch at q={q} n={n} d={d} a_log={la}")
            if not (b if b is not None else c):
                continue
            summary["count_pb"] += 1
            t1 = time.perf_counter()
            params = PBFamilyParams(q, 2, n, d, ctx.xi_pow(la))
            verdicts = evaluate_predicates(params)
            if task.family == "t110" and task.gcd_mode:
                verdicts["T1.10"] = predicate_T110(q, n, d, params.a, 2, gcd_mode=True)
            for rid in ("T1.9", "T1.10"):
                if verdicts[rid].value is False:
                    violations.append(f"{rid} asserts non-PB at q={q} n={n} d={d} a_log={la}")
            diag = None
            if task.diagnostics:
                diag = diagnose(params).to_json()
                if diag["mu_count"] != 0:
                    violations.append(f"collision on mu at q={q} n={n} d={d} a_log={la}")
            rec = ScanRecord(q, 2, n, d, la, b, c, {k: v.to_json() for k, v in verdicts.items()},
                             diag, conds, norm, time.perf_counter() - t1)
            records.append(rec.to_json())
    summary["seconds"] = round(time.perf_counter() - t0, 6)
    if task.use_cache:
        cache.store_slice(ctx.to_json(), key, {"records": records, "summary": summary,
                                               "violations": violations})
    return records, summary, violations


def _execute(family: str, tasks: list[_Slice], workers: int) -> ScanResult:
    if workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_slice, tasks, chunksize=max(1, len(tasks) // (4 * workers))))
    else:
        parts = [_run_slice(t) for t in tasks]
    records, summary, violations = [], [], []
    # pool.map keeps task order, so the merge is in parameter order
    for recs, row, viol in parts:
        records.extend(ScanRecord.from_json(r) for r in recs)
        summary.append(row)
        violations.extend(viol)
    return ScanResult(family, records, summary, violations)


def _n_values(q: int, n_range) -> list[int]:
    if n_range is None:
        return list(range(1, q * q))
    return list(n_range)


def scan_T19(q_list: Iterable[int], n_range=None, *, method: str = "auto", workers: int = 1,
             diagnostics: bool = True, use_cache: bool = False) -> ScanResult:
    """PB search over f = X^n (X^{3(q-1)} + a), q = 2^m, all a with a^{q+1} != 1."""
    tasks = []
    for q in q_list:
        p, _ = prime_power(q)
        if p != 2:
            raise DomainError(f"q = {q} is not a power of 2")
        for n in _n_values(q, n_range):
            tasks.append(_Slice("t19", q, n, 3, method, False, diagnostics, use_cache))
    return _execute("t19", tasks, workers)


def scan_T110(q_list: Iterable[int], n_range=None, d_range=None, *, gcd_mode: bool = False,
              method: str = "auto", workers: int = 1, diagnostics: bool = True,
              use_cache: bool = False) -> ScanResult:
    """PB search over f = X^n (X^{d(q-1)} + a), d >= 2, all a with a^{q+1} != 1.

    By default d runs over the divisors of q+1. With ``gcd_mode`` any d is
    allowed and points with gcd(n, d) > 1 carry their normalized (n, d).
    """
    tasks = []
    for q in q_list:
        prime_power(q)
        ds = list(d_range) if d_range is not None else [d for d in range(2, q + 2) if (q + 1) % d == 0]
        for d in ds:
            if d < 2:
                raise DomainError("d must be at least 2")
            if not gcd_mode and (q + 1) % d:
                raise DomainError(f"d = {d} does not divide q+1 = {q + 1}")
            for n in _n_values(q, n_range):
                tasks.append(_Slice("t110", q, n, d, method, gcd_mode, diagnostics, use_cache))
    return _execute("t110", tasks, workers)
