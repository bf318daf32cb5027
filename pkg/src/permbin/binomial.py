"""Binomials aX^m0 + bX^n0 viewed as functions on a finite field.

Exponents are reduced into {1, ..., Q-1} (Q the field order) and stored with
m0 > n0, swapping coefficients when reduction reverses the order, so each
function has exactly one stored representative.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import kernels
from .errors import CapacityError, DomainError
from .field import FieldCtx, FieldElement, field_of_order, mu_subgroup
from .residue import normalize

BRUTE_LIMIT = 1 << 16
MU_LIMIT = 1 << 20


def _code(ctx: FieldCtx, x) -> int:
    if isinstance(x, FieldElement):
        if x.ctx.key != ctx.key:
            raise DomainError(f"coefficient from F_{x.ctx.order}, expected F_{ctx.order}")
        return x.value
    if not 0 <= x < ctx.order:
        raise DomainError(f"{x} is not an element code of F_{ctx.order}")
    return int(x)


class Binomial:
    """a X^m0 + b X^n0 over ``ctx`` with Q-1 >= m0 > n0 >= 1.

    ``a`` and ``b`` are element codes (see :mod:`permbin.field`).
    """

    __slots__ = ("ctx", "a", "m0", "b", "n0")

    def __init__(self, ctx: FieldCtx, a, m0: int, b, n0: int):
        qm1 = ctx.qm1
        a, b = _code(ctx, a), _code(ctx, b)
        if a == 0 or b == 0:
            raise DomainError("binomial coefficients must be nonzero")
        if qm1 < 2:
            raise DomainError(f"F_{ctx.order} has no binomials")
        m0, n0 = normalize(m0, qm1), normalize(n0, qm1)
        if m0 == qm1 or n0 == qm1:
            raise DomainError("an exponent is divisible by Q-1")
        if m0 == n0:
            raise DomainError("exponents are congruent mod Q-1")
        if m0 < n0:
            a, m0, b, n0 = b, n0, a, m0
        self.ctx, self.a, self.m0, self.b, self.n0 = ctx, a, m0, b, n0

    def key(self) -> tuple:
        return (self.ctx.key, self.a, self.m0, self.b, self.n0)

    def __eq__(self, other):
        return isinstance(other, Binomial) and self.key() == other.key()

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        c = self.ctx
        return f"Binomial(F_{c.order}: {c.vec(self.a)}*X^{self.m0} + {c.vec(self.b)}*X^{self.n0})"

    def __call__(self, x):
        return evaluate(self, x)

    @property
    def coeff_hi(self) -> FieldElement:
        return FieldElement(self.ctx, self.a)

    @property
    def coeff_lo(self) -> FieldElement:
        return FieldElement(self.ctx, self.b)

    def logs(self) -> tuple[int, int]:
        return self.ctx.dlog(self.a), self.ctx.dlog(self.b)

    def to_json(self) -> dict:
        la, lb = self.logs()
        return {
            "field": self.ctx.to_json(),
            "terms": [{"coeff_log": la, "exp": self.m0}, {"coeff_log": lb, "exp": self.n0}],
        }

    @staticmethod
    def from_json(obj: dict) -> "Binomial":
        ctx = FieldCtx.from_json(obj["field"])
        terms = obj["terms"]
        if len(terms) != 2:
            raise DomainError("a binomial has exactly two terms")
        (t1, t2) = terms
        return Binomial(ctx, ctx.xi_pow(int(t1["coeff_log"])), int(t1["exp"]),
                        ctx.xi_pow(int(t2["coeff_log"])), int(t2["exp"]))

    @staticmethod
    def from_logs(ctx: FieldCtx, la: int, m0: int, lb: int, n0: int) -> "Binomial":
        return Binomial(ctx, ctx.xi_pow(la), m0, ctx.xi_pow(lb), n0)


@dataclass(frozen=True)
class PBFamilyParams:
    """Parameters of X^n (X^{d(q-1)} + a) over F_{q^e}; ``a`` is an element code."""

    q: int
    e: int
    n: int
    d: int
    a: int

    @property
    def ctx(self) -> FieldCtx:
        return field_of_order(self.q**self.e)

    @classmethod
    def with_log(cls, q: int, e: int, n: int, d: int, a_log: int) -> "PBFamilyParams":
        ctx = field_of_order(q**e)
        return cls(q, e, n, d, ctx.xi_pow(a_log))

    @property
    def a_elem(self) -> FieldElement:
        return FieldElement(self.ctx, self.a)

    def admissibility_failure(self) -> str | None:
        """Name of the first violated admissibility condition, if any."""
        Qm1 = self.q**self.e - 1
        if self.n < 1 or self.d < 1:
            return "n and d must be positive"
        if self.a == 0:
            return "a must be nonzero"
        if self.n % Qm1 == 0:
            return "n = 0 mod q^e-1"
        if self.d * (self.q - 1) % Qm1 == 0:
            return "d(q-1) = 0 mod q^e-1"
        if (self.n + self.d * (self.q - 1)) % Qm1 == 0:
            return "n + d(q-1) = 0 mod q^e-1"
        return None

    def admissible(self) -> bool:
        return self.admissibility_failure() is None


def from_family(params: PBFamilyParams) -> Binomial:
    why = params.admissibility_failure()
    if why:
        raise DomainError(f"inadmissible parameters: {why}")
    ctx = params.ctx
    return Binomial(ctx, 1, params.n + params.d * (params.q - 1), params.a, params.n)


def family(q: int, e: int, n: int, d: int, a_log: int) -> Binomial:
    return from_family(PBFamilyParams.with_log(q, e, n, d, a_log))


def evaluate(f: Binomial, x) -> FieldElement:
    ctx = f.ctx
    v = _code(ctx, x)
    return FieldElement(ctx, ctx.add(ctx.mul(f.a, ctx.pow(v, f.m0)), ctx.mul(f.b, ctx.pow(v, f.n0))))


def _check_brute(ctx: FieldCtx) -> None:
    if ctx.order > BRUTE_LIMIT:
        raise CapacityError(f"F_{ctx.order} exceeds the enumeration cap {BRUTE_LIMIT}")


def is_permutation(f: Binomial) -> bool:
    """Exhaustive test: does f permute its field?"""
    _check_brute(f.ctx)
    la, lb = f.logs()
    return kernels.active.perm_check(f.ctx, la, f.m0, lb, f.n0)


def as_function_table(f: Binomial) -> list[int]:
    """table[x] = f(x) for every element code x."""
    ctx = f.ctx
    _check_brute(ctx)
    la, lb = f.logs()
    logs = kernels.active.table_logs(ctx, la, f.m0, lb, f.n0)
    table = [0] * ctx.order
    exp = ctx.exp
    for k, v in enumerate(logs):
        table[exp[k]] = 0 if v < 0 else exp[v]
    return table


def _mu_check_table_free(ctx: FieldCtx, q: int, n: int, d: int, a: int) -> bool:
    seen = set()
    for x in mu_subgroup(ctx, q):
        s = ctx.add(ctx.pow(x.value, d), a)
        if s == 0:
            return False
        v = ctx.mul(ctx.pow(x.value, n), ctx.pow(s, q - 1))
        if v in seen:
            return False
        seen.add(v)
    return True


def is_pb_mu_criterion(params: PBFamilyParams) -> bool:
    """gcd(n, d(q-1)) = 1 and x -> x^n (x^d + a)^(q-1) permutes mu_{q+1}."""
    if params.e != 2:
        raise DomainError("the mu_{q+1} criterion needs e = 2")
    q, n, d = params.q, params.n, params.d
    if q > MU_LIMIT:
        raise CapacityError(f"q = {q} exceeds the criterion cap {MU_LIMIT}")
    if math.gcd(n, d * (q - 1)) != 1:
        return False
    ctx = params.ctx
    if not ctx.has_tables:
        return _mu_check_table_free(ctx, q, n, d, params.a)
    return kernels.active.mu_check(ctx, q, n, d, ctx.dlog(params.a))


# -- equivalence generators


def _unit(ctx: FieldCtx, u) -> int:
    c = _code(ctx, u)
    if c == 0:
        raise DomainError("scaling element must be nonzero")
    return c


def transform_alpha(f: Binomial, u) -> Binomial:
    """f -> u f."""
    ctx = f.ctx
    u = _unit(ctx, u)
    return Binomial(ctx, ctx.mul(u, f.a), f.m0, ctx.mul(u, f.b), f.n0)


def transform_beta(f: Binomial) -> Binomial:
    """f -> f^p."""
    ctx = f.ctx
    p = ctx.p
    return Binomial(ctx, ctx.pow(f.a, p), f.m0 * p, ctx.pow(f.b, p), f.n0 * p)


def transform_gamma(f: Binomial, v, s: int) -> Binomial:
    """f -> f(v X^s) with gcd(s, Q-1) = 1."""
    ctx = f.ctx
    v = _unit(ctx, v)
    if s <= 0 or math.gcd(s, ctx.qm1) != 1:
        raise DomainError(f"gcd({s}, {ctx.qm1}) != 1")
    return Binomial(ctx, ctx.mul(f.a, ctx.pow(v, f.m0)), f.m0 * s,
                    ctx.mul(f.b, ctx.pow(v, f.n0)), f.n0 * s)
