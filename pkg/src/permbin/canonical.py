"""Canonical forms of permutation binomials under equivalence.

Two binomials are equivalent when one is obtained from the other by the
generators alpha_u: f -> u f, beta: f -> f^p and gamma_{v,s}: f -> f(v X^s)
with gcd(s, q-1) = 1. Every permutation binomial is equivalent to exactly one
X^n (X^d + xi^e) with d | q-1, n in N_d and e in E_{d,n}; ``canonical_form``
computes that triple together with the transformation chain reaching it.

The coefficient representative depends on the primitive element xi, which
is pinned by :func:`permbin.field.make_field`.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from typing import Iterator

from . import kernels
from .binomial import (
    Binomial,
    as_function_table,
    is_permutation,
    transform_alpha,
    transform_beta,
    transform_gamma,
)
from .errors import CapacityError, DomainError
from .field import FieldCtx
from .residue import coprime_lift, g_orbits, normalize, orbit_group, orbit_min, units

BRUTE_EQUIV_LIMIT = 1 << 12


@dataclass(frozen=True, order=True)
class CanonicalTriple:
    d: int
    n: int
    a_log: int

    def to_json(self) -> dict:
        return {"d": self.d, "n": self.n, "a_log": self.a_log}

    @classmethod
    def from_json(cls, obj: dict) -> "CanonicalTriple":
        return cls(int(obj["d"]), int(obj["n"]), int(obj["a_log"]))


@dataclass(frozen=True)
class Step:
    """One generator application: ``alpha`` (u_log), ``beta`` or ``gamma`` (v_log, s)."""

    kind: str
    u_log: int = 0
    v_log: int = 0
    s: int = 1

    def apply(self, f: Binomial) -> Binomial:
        ctx = f.ctx
        if self.kind == "alpha":
            return transform_alpha(f, ctx.xi_pow(self.u_log))
        if self.kind == "beta":
            return transform_beta(f)
        if self.kind == "gamma":
            return transform_gamma(f, ctx.xi_pow(self.v_log), self.s)
        raise DomainError(f"unknown transformation {self.kind!r}")

    def to_json(self) -> dict:
        if self.kind == "alpha":
            return {"kind": "alpha", "u_log": self.u_log}
        if self.kind == "beta":
            return {"kind": "beta"}
        return {"kind": "gamma", "v_log": self.v_log, "s": self.s}

    @classmethod
    def from_json(cls, obj: dict) -> "Step":
        return cls(obj["kind"], int(obj.get("u_log", 0)), int(obj.get("v_log", 0)), int(obj.get("s", 1)))


@dataclass(frozen=True)
class EquivalenceWitness:
    """g(X) = u f(v X^s)^(p^i), with u = xi^u_log and v = xi^v_log."""

    u_log: int
    v_log: int
    s: int
    i: int

    def to_json(self) -> dict:
        return {"u_log": self.u_log, "v_log": self.v_log, "s": self.s, "i": self.i}


def replay(f: Binomial, chain: list[Step]) -> Binomial:
    for step in chain:
        f = step.apply(f)
    return f


def collapse(ctx: FieldCtx, chain: list[Step]) -> EquivalenceWitness:
    """Fold a chain into a single (u, v, s, i).

    Uses that gamma commutes with alpha and beta and that
    beta o alpha_u = alpha_{u^p} o beta.
    """
    qm1, p = ctx.qm1, ctx.p
    u, v, s, i = 0, 0, 1, 0
    for step in chain:
        if step.kind == "alpha":
            u = (u + step.u_log) % qm1
        elif step.kind == "beta":
            u = u * p % qm1
            i += 1
        else:
            v = (v + step.v_log * s) % qm1
            s = s * step.s % qm1 or qm1
    return EquivalenceWitness(u, v, s, i % ctx.m)


def apply_witness_table(ctx: FieldCtx, table: list[int], w: EquivalenceWitness) -> list[int]:
    """Pointwise x -> u * table[v x^s]^(p^i); independent of the Binomial code."""
    u = ctx.xi_pow(w.u_log)
    v = ctx.xi_pow(w.v_log)
    e = ctx.p**w.i
    return [ctx.mul(u, ctx.pow(table[ctx.mul(v, ctx.pow(x, w.s))], e)) for x in ctx.elements()]


# -- N_d, G_{d,n}, A_{d,n}


def _check_divisor(ctx: FieldCtx, d: int) -> None:
    if d <= 0 or ctx.qm1 % d:
        raise DomainError(f"d = {d} does not divide q-1 = {ctx.qm1}")


def compute_Nd(ctx: FieldCtx, d: int) -> list[int]:
    """Orbit minima of {1, ..., q-1} under the +-1 action; sorted."""
    _check_divisor(ctx, d)
    return [block[0] for block in g_orbits(ctx.qm1, d)]


def _minus_one_allowed(qm1: int, d: int, n: int) -> bool:
    k = qm1 // d
    return (d + 2 * n) % k == 0 and math.gcd(n, qm1) == 1


@functools.lru_cache(maxsize=None)
def _gdn(p: int, qm1: int, d: int, n: int) -> tuple[int, ...]:
    if d == 1:
        return (1,)
    gens = [p % d]
    if _minus_one_allowed(qm1, d, n):
        gens.append(d - 1)
    group = {1}
    frontier = [1]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x * g % d
            if y not in group:
                group.add(y)
                frontier.append(y)
    return tuple(sorted(group))


def compute_Gdn(ctx: FieldCtx, d: int, n: int) -> list[int]:
    """Subgroup of Z_d^x generated by p, plus -1 when d = -2n mod (q-1)/d and gcd(n, q-1) = 1."""
    _check_divisor(ctx, d)
    if orbit_min(ctx.qm1, d, n) != normalize(n, ctx.qm1):
        raise DomainError(f"n = {n} is not in N_{d}")
    return list(_gdn(ctx.p, ctx.qm1, d, normalize(n, ctx.qm1)))


@functools.lru_cache(maxsize=None)
def _edn(p: int, qm1: int, d: int, n: int) -> tuple[int, ...]:
    group = _gdn(p, qm1, d, n)
    seen = [False] * d
    reps = []
    for x in range(d):
        if seen[x]:
            continue
        reps.append(x)
        for g in group:
            seen[x * g % d] = True
    return tuple(reps)


def compute_Adn(ctx: FieldCtx, d: int, n: int) -> list[int]:
    """E_{d,n}: least element of each G_{d,n}-orbit in Z_d; A_{d,n} = {xi^e}."""
    compute_Gdn(ctx, d, n)
    return list(_edn(ctx.p, ctx.qm1, d, normalize(n, ctx.qm1)))


# -- the reduction


def _form(f: Binomial, n: int, d: int) -> tuple[int, int]:
    """(c_hi, c_lo) with f = X^n (c_hi X^d + c_lo) as functions."""
    qm1 = f.ctx.qm1
    nd = normalize(n + d, qm1)
    if f.n0 == n and f.m0 == nd:
        return f.a, f.b
    if f.m0 == n and f.n0 == nd:
        return f.b, f.a
    raise AssertionError(f"{f} is not of the form X^{n}(cX^{d} + c')")


def _gamma_step(f: Binomial, s: int, chain: list[Step], v_log: int = 0) -> Binomial:
    qm1 = f.ctx.qm1
    s = normalize(s, qm1)
    if s == 1 and v_log % qm1 == 0:
        return f
    step = Step("gamma", v_log=v_log % qm1, s=s)
    chain.append(step)
    return step.apply(f)


def _alpha_step(f: Binomial, u_log: int, chain: list[Step]) -> Binomial:
    u_log %= f.ctx.qm1
    if u_log == 0:
        return f
    step = Step("alpha", u_log=u_log)
    chain.append(step)
    return step.apply(f)


def canonical_binomial(ctx: FieldCtx, triple: CanonicalTriple) -> Binomial:
    """X^n (X^d + xi^a_log)."""
    return Binomial(ctx, 1, triple.n + triple.d, ctx.xi_pow(triple.a_log), triple.n)


def canonical_form(f: Binomial, check: bool = True) -> tuple[CanonicalTriple, list[Step]]:
    """Reduce a permutation binomial to its canonical triple.

    Returns the triple and the transformation chain; replaying the chain on
    ``f`` gives ``canonical_binomial(ctx, triple)``. With ``check=False`` the
    permutation test is skipped and the caller vouches for ``f``.
    """
    ctx = f.ctx
    qm1, p = ctx.qm1, ctx.p
    if check and not is_permutation(f):
        raise DomainError(f"{f} is not a permutation binomial")
    chain: list[Step] = []

    # d = gcd(m0 - n0, q-1); substitute X^s so the exponent gap becomes d
    diff = f.m0 - f.n0
    d = math.gcd(diff, qm1)
    k = qm1 // d
    r = pow(diff // d, -1, k) if k > 1 else 1
    cur = _gamma_step(f, coprime_lift(r, qm1, k), chain)
    n1 = cur.n0 if normalize(cur.n0 + d, qm1) == cur.m0 else cur.m0

    # move n1 to the orbit minimum; prefer t = 1 mod (q-1)/d, then least t
    n = orbit_min(qm1, d, n1)
    group = orbit_group(qm1, d)
    witness = None
    for t, shift in sorted(group.actions(), key=lambda a: (a[1] != 0, a[0])):
        if group.act(t, n1, shift) == n:
            witness = t
            break
    if witness is None:
        raise AssertionError("orbit minimum not reached")  # pragma: no cover
    cur = _gamma_step(cur, witness, chain)
    c_hi, c_lo = _form(cur, n, d)
    cur = _alpha_step(cur, -ctx.dlog(c_hi), chain)
    lc = ctx.dlog(_form(cur, n, d)[1])

    # land the coefficient on a representative of E_{d,n}
    reps = set(_edn(p, qm1, d, n))
    allow_minus = d > 1 and _minus_one_allowed(qm1, d, n)
    landing = None
    for i in range(ctx.m):
        pi = pow(p, i)
        if pi * lc % d in reps:
            landing = (i, 1, pi * lc % d)
            break
        if allow_minus and -pi * lc % d in reps:
            landing = (i, -1, -pi * lc % d)
            break
    if landing is None:
        raise AssertionError("coefficient representative not found")  # pragma: no cover
    i, sign, e = landing

    if sign == -1:
        # X^n (X^d + c) ~ X^n (X^d + c^-1) via X -> X^(1 + kd), kn = 1 mod q-1
        kk = pow(n, -1, qm1)
        cur = _gamma_step(cur, 1 + kk * d, chain)
        c_hi, _ = _form(cur, n, d)
        cur = _alpha_step(cur, -ctx.dlog(c_hi), chain)
        lc = ctx.dlog(_form(cur, n, d)[1])

    pi = pow(p, i)
    lb = (pi * lc - e) // d
    s = pow(pi, -1, qm1) if qm1 > 1 else 1
    cur = _gamma_step(cur, s, chain, v_log=lb * s)
    for _ in range(i):
        chain.append(Step("beta"))
        cur = transform_beta(cur)
    c_hi, c_lo = _form(cur, n, d)
    cur = _alpha_step(cur, -ctx.dlog(c_hi), chain)

    triple = CanonicalTriple(d, n, e)
    if cur != canonical_binomial(ctx, triple):
        raise AssertionError(f"reduction of {f} did not land on {triple}")
    return triple, chain


def equivalent(f: Binomial, g: Binomial) -> bool:
    """Equivalence of two permutation binomials via their canonical triples."""
    if f.ctx.key != g.ctx.key:
        raise DomainError("binomials over different fields")
    return canonical_form(f)[0] == canonical_form(g)[0]


def equivalent_bruteforce(f: Binomial, g: Binomial) -> EquivalenceWitness | None:
    """Search every (u, v, s, i) for g = u f(v X^s)^(p^i) on function tables."""
    ctx = f.ctx
    if ctx.key != g.ctx.key:
        raise DomainError("binomials over different fields")
    if ctx.order > BRUTE_EQUIV_LIMIT:
        raise CapacityError(f"F_{ctx.order} exceeds the brute-force equivalence cap {BRUTE_EQUIV_LIMIT}")
    tf, tg = as_function_table(f), as_function_table(g)
    nonzero = [x for x in ctx.elements() if tg[x]]
    x0 = nonzero[0]
    for i in range(ctx.m):
        e = ctx.p**i
        for s in units(ctx.qm1):
            powers = [ctx.pow(x, s) for x in ctx.elements()]
            for lv in range(ctx.qm1):
                v = ctx.xi_pow(lv)
                h0 = ctx.pow(tf[ctx.mul(v, powers[x0])], e)
                if h0 == 0:
                    continue
                u = ctx.div(tg[x0], h0)
                if all(ctx.mul(u, ctx.pow(tf[ctx.mul(v, powers[x])], e)) == tg[x] for x in ctx.elements()):
                    return EquivalenceWitness(ctx.dlog(u), lv, s, i)
    return None


def enumerate_pbs(ctx: FieldCtx) -> Iterator[Binomial]:
    """All permutation binomials of ``ctx`` in (m0, n0, a, b) order."""
    qm1 = ctx.qm1
    las = [la for la in range(qm1) for _ in range(qm1)]
    lbs = [lb for _ in range(qm1) for lb in range(qm1)]
    for m0 in range(2, qm1):
        for n0 in range(1, m0):
            flags = kernels.active.perm_flags(ctx, m0, n0, las, lbs)
            for la, lb, ok in zip(las, lbs, flags):
                if ok:
                    yield Binomial.from_logs(ctx, la, m0, lb, n0)


def classify(ctx: FieldCtx) -> Iterator[tuple[Binomial, CanonicalTriple, list[Step]]]:
    for f in enumerate_pbs(ctx):
        triple, chain = canonical_form(f, check=False)
        yield f, triple, chain
