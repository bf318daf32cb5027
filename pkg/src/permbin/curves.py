"""The rational map G = P/Q on mu_{q+1}, its curve N(G) and point counts.

For f = X^n (X^{d(q-1)} + a) over F_{q^2} and x in mu_{q+1},
x^n (x^d + a)^{q-1} = G(x) with G = (a^q X^n + X^{n-d}) / (X^d + a). N(G) is
the numerator of (G(X) - G(Y)) / (X - Y); an off-diagonal zero of N(G) on
mu_{q+1} is a collision of G there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from . import kernels
from .binomial import PBFamilyParams
from .errors import CapacityError, DomainError
from .field import FieldCtx

POINT_LIMIT = 1 << 12

# -- dense univariate polynomials over a field (element codes, little-endian)


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_sub(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([ctx.sub(x, y) for x, y in zip(a, b)])


def poly_add(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([ctx.add(x, y) for x, y in zip(a, b)])


def poly_divmod(ctx: FieldCtx, a: list[int], b: list[int]) -> tuple[list[int], list[int]]:
    b = _trim(list(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = _trim(list(a))
    inv = ctx.inv(b[-1])
    quot = [0] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        c = ctx.mul(a[-1], inv)
        shift = len(a) - len(b)
        quot[shift] = c
        for i, bi in enumerate(b):
            a[shift + i] = ctx.sub(a[shift + i], ctx.mul(c, bi))
        a.pop()
        _trim(a)
    return _trim(quot), a


def poly_gcd(ctx: FieldCtx, a: list[int], b: list[int]) -> list[int]:
    """Monic gcd (the zero polynomial if both are zero)."""
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, poly_divmod(ctx, a, b)[1]
    if a:
        inv = ctx.inv(a[-1])
        a = [ctx.mul(c, inv) for c in a]
    return a


def monomials(ctx: FieldCtx, terms: dict[int, int]) -> list[int]:
    """Dense polynomial from {exponent: coefficient}, summing repeats."""
    out = [0] * (max(terms) + 1 if terms else 0)
    for e, c in terms.items():
        out[e] = ctx.add(out[e], c)
    return _trim(out)


def poly_eval(ctx: FieldCtx, a: list[int], x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = ctx.add(ctx.mul(acc, x), c)
    return acc


@dataclass(frozen=True)
class RationalMap:
    ctx: FieldCtx
    P: list[int]
    Q: list[int]
    degG: int

    def __call__(self, x: int) -> int:
        return self.ctx.div(poly_eval(self.ctx, self.P, x), poly_eval(self.ctx, self.Q, x))


def _terms(ctx: FieldCtx, pairs: list[tuple[int, int]]) -> list[int]:
    acc: dict[int, int] = {}
    for e, c in pairs:
        acc[e] = ctx.add(acc.get(e, 0), c)
    return monomials(ctx, acc)


def build_G(params: PBFamilyParams) -> RationalMap:
    """P/Q with P = a^q X^n + X^{n-d}, Q = X^d + a (n >= d) or
    P = a^q X^d + 1, Q = X^{2d-n} + a X^{d-n} (n < d)."""
    if params.e != 2:
        raise DomainError("G is defined for e = 2")
    why = params.admissibility_failure()
    if why:
        raise DomainError(f"inadmissible parameters: {why}")
    ctx = params.ctx
    q, n, d, a = params.q, params.n, params.d, params.a
    aq = ctx.pow(a, q)
    if n >= d:
        P = _terms(ctx, [(n, aq), (n - d, 1)])
        Q = _terms(ctx, [(d, 1), (0, a)])
        deg = n
    else:
        P = _terms(ctx, [(d, aq), (0, 1)])
        Q = _terms(ctx, [(2 * d - n, 1), (d - n, a)])
        deg = 2 * d - n
    if ctx.pow(a, q + 1) != 1 and len(poly_gcd(ctx, P, Q)) != 1:
        raise AssertionError("gcd(P, Q) != 1 although a^(q+1) != 1")
    return RationalMap(ctx, P, Q, deg)


@dataclass
class BivariatePoly:
    """Sparse polynomial: {(i, j): coefficient code} for X^i Y^j, no zero entries."""

    ctx: FieldCtx
    terms: dict[tuple[int, int], int] = field(default_factory=dict)

    def __post_init__(self):
        self.terms = {k: v for k, v in self.terms.items() if v}

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __call__(self, x: int, y: int) -> int:
        ctx = self.ctx
        acc = 0
        for (i, j), c in self.terms.items():
            acc = ctx.add(acc, ctx.mul(c, ctx.mul(ctx.pow(x, i), ctx.pow(y, j))))
        return acc

    def swapped(self) -> "BivariatePoly":
        return BivariatePoly(self.ctx, {(j, i): c for (i, j), c in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, BivariatePoly) and self.ctx.key == other.ctx.key
                and self.terms == other.terms)

    def log_terms(self) -> list[tuple[int, int, int]]:
        return sorted((i, j, self.ctx.dlog(c)) for (i, j), c in self.terms.items())

    def to_json(self) -> dict:
        return {
            "field": self.ctx.to_json(),
            "terms": [{"i": i, "j": j, "coeff_log": cl} for i, j, cl in self.log_terms()],
        }

    @staticmethod
    def from_json(obj: dict) -> "BivariatePoly":
        ctx = FieldCtx.from_json(obj["field"])
        terms: dict[tuple[int, int], int] = {}
        for t in obj["terms"]:
            k = (int(t["i"]), int(t["j"]))
            terms[k] = ctx.add(terms.get(k, 0), ctx.xi_pow(int(t["coeff_log"])))
        return BivariatePoly(ctx, terms)


def numerator_NG(gmap: RationalMap) -> BivariatePoly:
    """(P(X)Q(Y) - P(Y)Q(X)) / (X - Y), by exact synthetic division."""
    ctx = gmap.ctx
    num: dict[int, dict[int, int]] = {}  # X-degree -> {Y-degree: coeff}

    def acc(i, j, c):
        row = num.setdefault(i, {})
        row[j] = ctx.add(row.get(j, 0), c)

    for i, pi in enumerate(gmap.P):
        if not pi:
            continue
        for j, qj in enumerate(gmap.Q):
            if qj:
                c = ctx.mul(pi, qj)
                acc(i, j, c)
                acc(j, i, ctx.neg(c))
    top = max((i for i, row in num.items() if any(row.values())), default=-1)
    out: dict[tuple[int, int], int] = {}
    if top < 0:
        return BivariatePoly(ctx, out)
    # divide by X - Y as a polynomial in X over F[Y]: h_{i-1} = c_i + Y h_i
    h: dict[int, int] = {}
    for i in range(top, 0, -1):
        nxt = dict(num.get(i, {}))
        for j, c in h.items():
            nxt[j + 1] = ctx.add(nxt.get(j + 1, 0), c)
        h = {j: c for j, c in nxt.items() if c}
        for j, c in h.items():
            out[(i - 1, j)] = c
    rem = dict(num.get(0, {}))
    for j, c in h.items():
        rem[j + 1] = ctx.add(rem.get(j + 1, 0), c)
    if any(rem.values()):
        raise AssertionError("N(G): nonzero remainder on division by X - Y")
    return BivariatePoly(ctx, out)


def degree_bound(n: int, d: int) -> int:
    return n + d - 1 if n >= d else 3 * d - n - 1


def _x_minus_1_quotient(ctx: FieldCtx, pairs: list[tuple[int, int]]) -> list[int]:
    """sum(c X^e) / (X - 1); the sum must vanish at X = 1."""
    quot, rem = poly_divmod(ctx, _terms(ctx, pairs), [ctx.neg(1), 1])
    if rem:
        raise AssertionError("expected an exact division by X - 1")
    return quot


def primitivity_polys(params: PBFamilyParams) -> tuple[list[int], list[int]]:
    """The Y = 1 specializations of the Z^2 and Z coefficients of the quadratic
    whose value at Z^d is the homogenized N(G)."""
    ctx = params.ctx
    q, n, d = params.q, params.n, params.d
    A = ctx.pow(params.a, q + 1)
    mA, m1 = ctx.neg(A), ctx.neg(1)
    if n >= d:
        c2 = _x_minus_1_quotient(ctx, [(n - d, 1), (0, m1)]) if n > d else []
        c1 = _x_minus_1_quotient(ctx, [(n, A), (0, mA), (n - d, 1), (d, m1)])
    else:
        c2 = _x_minus_1_quotient(ctx, [(d - n, 1), (0, m1)])
        c1 = _x_minus_1_quotient(ctx, [(d, A), (d - n, mA), (2 * d - n, m1), (0, 1)])
    return c2, c1


def primitivity_check(params: PBFamilyParams) -> bool:
    """Whether the two coefficient polynomials are coprime (gcd constant)."""
    if params.e != 2:
        raise DomainError("primitivity check is defined for e = 2")
    ctx = params.ctx
    if ctx.pow(params.a, params.q + 1) == 1:
        raise DomainError("primitivity check requires a^(q+1) != 1")
    c2, c1 = primitivity_polys(params)
    return len(poly_gcd(ctx, c2, c1)) == 1


def _point_logs(ctx: FieldCtx, points) -> list[int]:
    return [-1 if (v := int(x)) == 0 else ctx.dlog(v) for x in points]


def count_offdiagonal_points(poly: BivariatePoly, ctx: FieldCtx | None = None, points=None) -> int:
    """Number of (x, y) with x != y, both in ``points`` (default: the whole
    field), where poly vanishes."""
    ctx = ctx or poly.ctx
    if poly.is_zero():
        raise DomainError("the zero polynomial vanishes everywhere")
    pts = list(ctx.elements()) if points is None else [int(x) for x in points]
    if len(pts) > POINT_LIMIT:
        raise CapacityError(f"{len(pts)} points per axis exceeds the cap {POINT_LIMIT}")
    logs = _point_logs(ctx, pts)
    return kernels.active.count_zeros(ctx, poly.log_terms(), logs, logs, True)


def mu_points(ctx: FieldCtx, q: int) -> list[int]:
    if q * q != ctx.order:
        raise DomainError(f"|F| = {ctx.order} is not {q}^2")
    g = ctx.pow(ctx.xi, q - 1)
    out, x = [], 1
    for _ in range(q + 1):
        out.append(x)
        x = ctx.mul(x, g)
    return out


@dataclass(frozen=True)
class HasseWeilBound:
    """q - (delta-1)(delta-2) sqrt(q) - 2 delta; ``error`` bounds |value - true value|."""

    value: int | float
    exact: bool
    error: float

    @property
    def positive(self) -> bool:
        return self.value - self.error > 0


def hasse_weil_lower(q: int, delta: int) -> HasseWeilBound:
    if q < 1 or delta < 1:
        raise DomainError("q and delta must be positive")
    c = (delta - 1) * (delta - 2)
    r = math.isqrt(q)
    if r * r == q:
        return HasseWeilBound(q - c * r - 2 * delta, True, 0.0)
    root = math.sqrt(q)
    err = c * root * 2.0**-50 + abs(q) * 2.0**-52
    return HasseWeilBound(q - c * root - 2 * delta, False, err)


@dataclass
class CurveDiagnostics:
    delta: int
    degree: int
    degree_bound: int
    affine_count: int | None
    mu_count: int
    hw_lower: int | float
    injective_on_mu: bool

    def to_json(self) -> dict:
        return {
            "delta": self.delta,
            "degree": self.degree,
            "degree_bound": self.degree_bound,
            "affine_count": self.affine_count,
            "mu_count": self.mu_count,
            "hw_lower": self.hw_lower,
            "injective_on_mu": self.injective_on_mu,
        }


def diagnose(params: PBFamilyParams, count_points: bool = False) -> CurveDiagnostics:
    """N(G) degree, mu-restricted collision count and the Hasse-Weil figure.

    ``delta`` is 2 deg G - 2, the degree bound the Hasse-Weil argument uses;
    the full affine count over F_{q^2} is only computed on request.
    """
    ctx = params.ctx
    gmap = build_G(params)
    N = numerator_NG(gmap)
    mu = mu_points(ctx, params.q)
    mu_count = count_offdiagonal_points(N, ctx, mu) if not N.is_zero() else len(mu) * (len(mu) - 1)
    affine = None
    if count_points and not N.is_zero():
        affine = count_offdiagonal_points(N, ctx)
    delta = 2 * gmap.degG - 2
    injective = kernels.active.mu_check(ctx, params.q, params.n, params.d, ctx.dlog(params.a))
    return CurveDiagnostics(
        delta=delta,
        degree=N.total_degree,
        degree_bound=degree_bound(params.n, params.d),
        affine_count=affine,
        mu_count=mu_count,
        hw_lower=hasse_weil_lower(params.q, max(delta, 1)).value,
        injective_on_mu=injective,
    )
