"""Finite fields F_{p^m} with a deterministic modulus and primitive element.

An element is encoded as an integer ``0 <= v < p**m`` whose base-p digits
are the coefficients (c_0, ..., c_{m-1}) of its polynomial-basis
representation, c_0 least significant. Integer order on these codes is the
single element order used wherever a "least" choice is made.

Fields up to ``TABLE_LIMIT`` elements carry exp/log/Zech tables so that
multiplication and addition are table lookups; larger fields fall back to
polynomial arithmetic and have no discrete logarithm.
"""

from __future__ import annotations

import functools
import math
from typing import Iterable, Sequence

import numpy as np

from . import cache
from .errors import CapacityError, DomainError

TABLE_LIMIT = 1 << 20
# Construction beyond this is refused outright; irreducibility and order
# checks become impractical in pure Python.
ORDER_LIMIT = 1 << 64


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division."""
    out: dict[int, int] = {}
    f = 2
    while f * f <= n:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 1 if f == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, m) with q == p**m, or raise DomainError."""
    if q < 2:
        raise DomainError(f"{q} is not a prime power")
    fac = factorize(q)
    if len(fac) != 1:
        raise DomainError(f"{q} is not a prime power")
    ((p, m),) = fac.items()
    return p, m


# -- polynomials over F_p: little-endian coefficient lists, no trailing zeros


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_sub(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    out = [((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p for i in range(n)]
    return _trim(out)


def _poly_mod(a: Sequence[int], f: Sequence[int], p: int) -> list[int]:
    a = list(a)
    _trim(a)
    df = len(f) - 1
    inv_lead = pow(f[-1], -1, p)
    while len(a) - 1 >= df:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - df
        for i, fi in enumerate(f):
            a[shift + i] = (a[shift + i] - c * fi) % p
        _trim(a)
    return a


def _poly_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _trim(out)


def _poly_powmod(a: Sequence[int], e: int, f: Sequence[int], p: int) -> list[int]:
    result = [1]
    base = _poly_mod(a, f, p)
    while e:
        if e & 1:
            result = _poly_mod(_poly_mul(result, base, p), f, p)
        e >>= 1
        if e:
            base = _poly_mod(_poly_mul(base, base, p), f, p)
    return result


def _poly_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(f: Sequence[int], p: int) -> bool:
    """Irreducibility of a monic polynomial over F_p.

    f of degree m is irreducible iff gcd(f, X^{p^k} - X) = 1 for every
    1 <= k <= m // 2.
    """
    m = len(f) - 1
    if m < 1:
        return False
    if m == 1:
        return True
    h = [0, 1]
    for _ in range(m // 2):
        h = _poly_powmod(h, p, f, p)
        g = _poly_sub(h, [0, 1], p)
        if len(_poly_gcd(f, g, p)) != 1:
            return False
    return True


def _digits(v: int, p: int, m: int) -> list[int]:
    out = []
    for _ in range(m):
        v, c = divmod(v, p)
        out.append(c)
    return out


def _undigits(coeffs: Iterable[int], p: int) -> int:
    v = 0
    for c in reversed(list(coeffs)):
        v = v * p + c
    return v


def least_irreducible(p: int, m: int) -> list[int]:
    """Monic irreducible of degree m with the least coefficient code."""
    for c in range(p**m):
        f = _digits(c, p, m) + [1]
        if is_irreducible(f, p):
            return f
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover


class FieldCtx:
    """A constructed field F_{p^m}; immutable after construction.

    Attributes ``exp``, ``log`` and ``zech`` are lists when tables are
    present and ``None`` otherwise. ``exp[k] = xi^k``, ``log[x]`` is the
    discrete log of x (``-1`` for zero) and ``zech[k] = log(1 + xi^k)``
    (``-1`` when 1 + xi^k = 0).
    """

    def __init__(self, p: int, m: int, modulus: list[int], xi: int, tables: bool):
        self.p = p
        self.m = m
        self.order = p**m
        self.qm1 = self.order - 1
        self.modulus = tuple(modulus)
        self.xi = xi
        self.exp: list[int] | None = None
        self.log: list[int] | None = None
        self.zech: list[int] | None = None
        self._np: dict[str, np.ndarray] = {}
        if tables:
            self._build_tables()

    # -- construction helpers

    def _mult_matrix(self, c: int) -> np.ndarray:
        """Matrix M with digits(v * c) == digits(v) @ M mod p."""
        rows = []
        cd = _trim(_digits(c, self.p, self.m))
        for i in range(self.m):
            prod = _poly_mod([0] * i + cd, self.modulus, self.p)
            rows.append(prod + [0] * (self.m - len(prod)))
        return np.array(rows, dtype=np.int64)

    def _build_tables(self) -> None:
        if self.order >= cache.MIN_CACHED_ORDER:
            cached = cache.load_tables(self.to_json())
            if cached is not None and len(cached["log"]) == self.order:
                self._set_tables(cached["exp"], cached["log"], cached["zech"])
                return
        p, m, qm1 = self.p, self.m, self.qm1
        block = np.zeros((1, m), dtype=np.int64)
        block[0, 0] = 1
        while len(block) < qm1:
            step = self._pow_poly(self.xi, len(block))
            block = np.vstack([block, block @ self._mult_matrix(step) % p])
        block = block[:qm1]
        exp = block @ (p ** np.arange(m, dtype=np.int64))
        log = np.full(self.order, -1, dtype=np.int64)
        log[exp] = np.arange(qm1, dtype=np.int64)
        if np.count_nonzero(log >= 0) != qm1:
            raise AssertionError("xi is not primitive")
        d0 = exp % p
        one_plus = exp - d0 + (d0 + 1) % p
        zech = log[one_plus]
        self._set_tables(exp, log, zech)
        if self.order >= cache.MIN_CACHED_ORDER:
            cache.store_tables(self.to_json(), self._np)

    def _set_tables(self, exp: np.ndarray, log: np.ndarray, zech: np.ndarray) -> None:
        self.exp, self.log, self.zech = exp.tolist(), log.tolist(), zech.tolist()
        self._np = {"exp": exp, "log": log, "zech": zech}

    # -- metadata

    @property
    def has_tables(self) -> bool:
        return self.exp is not None

    @property
    def key(self) -> tuple[int, int]:
        return (self.p, self.m)

    def np_table(self, name: str) -> np.ndarray:
        if not self.has_tables:
            raise CapacityError(f"F_{self.order} has no tables (limit {TABLE_LIMIT})")
        return self._np[name]

    def __repr__(self) -> str:
        return f"FieldCtx(p={self.p}, m={self.m}, modulus={list(self.modulus)}, xi={self.xi})"

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "m": self.m,
            "modulus": list(self.modulus),
            "xi": _digits(self.xi, self.p, self.m),
        }

    @staticmethod
    def from_json(obj: dict) -> "FieldCtx":
        ctx = make_field(int(obj["p"]), int(obj["m"]))
        if list(obj["modulus"]) != list(ctx.modulus) or list(obj["xi"]) != ctx.vec(ctx.xi):
            raise DomainError("field description does not match the deterministic construction")
        return ctx

    # -- integer-level arithmetic

    def vec(self, v: int) -> list[int]:
        return _digits(v, self.p, self.m)

    def from_vec(self, coeffs: Sequence[int]) -> int:
        if len(coeffs) > self.m or any(not 0 <= c < self.p for c in coeffs):
            raise DomainError(f"bad coefficient vector {list(coeffs)} for F_{self.order}")
        return _undigits(coeffs, self.p)

    def from_int(self, n: int) -> int:
        """Image of the integer n in the prime field."""
        return n % self.p

    def add(self, x: int, y: int) -> int:
        if self.p == 2:
            return x ^ y
        if x == 0:
            return y
        if y == 0:
            return x
        if self.zech is not None:
            lx, ly = self.log[x], self.log[y]
            z = self.zech[(ly - lx) % self.qm1]
            return 0 if z < 0 else self.exp[(lx + z) % self.qm1]
        p = self.p
        return _undigits([(a + b) % p for a, b in zip(self.vec(x), self.vec(y))], p)

    def neg(self, x: int) -> int:
        if self.p == 2 or x == 0:
            return x
        return _undigits([(-a) % self.p for a in self.vec(x)], self.p)

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        if self.exp is not None:
            return self.exp[(self.log[x] + self.log[y]) % self.qm1]
        prod = _poly_mod(_poly_mul(_trim(self.vec(x)), _trim(self.vec(y)), self.p), self.modulus, self.p)
        return _undigits(prod, self.p)

    def _pow_poly(self, x: int, e: int) -> int:
        return _undigits(_poly_powmod(_trim(self.vec(x)), e, self.modulus, self.p), self.p)

    def pow(self, x: int, e: int) -> int:
        if x == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        if self.exp is not None:
            return self.exp[self.log[x] * e % self.qm1]
        return self._pow_poly(x, e % self.qm1)

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.pow(x, -1)

    def div(self, x: int, y: int) -> int:
        return self.mul(x, self.inv(y))

    def frobenius(self, x: int, k: int = 1) -> int:
        return self.pow(x, self.p ** (k % self.m))

    def xi_pow(self, k: int) -> int:
        if self.exp is not None:
            return self.exp[k % self.qm1]
        return self.pow(self.xi, k)

    def dlog(self, x: int) -> int:
        if x == 0:
            raise DomainError("discrete log of 0")
        if self.log is None:
            raise CapacityError(f"discrete log unavailable for F_{self.order} (no tables)")
        return self.log[x]

    def order_of(self, x: int) -> int:
        if x == 0:
            raise DomainError("0 has no multiplicative order")
        n = self.qm1
        for r, k in factorize(self.qm1).items():
            for _ in range(k):
                if self.pow(x, n // r) == 1:
                    n //= r
                else:
                    break
        return n

    def elements(self) -> range:
        """All elements in the deterministic (integer code) order."""
        return range(self.order)

    # -- element objects

    def __call__(self, v: int | Sequence[int]) -> "FieldElement":
        if isinstance(v, int):
            if not 0 <= v < self.order:
                raise DomainError(f"{v} is not an element code of F_{self.order}")
            return FieldElement(self, v)
        return FieldElement(self, self.from_vec(v))

    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def gen(self) -> "FieldElement":
        return FieldElement(self, self.xi)

    def element_from_log(self, k: int) -> "FieldElement":
        return FieldElement(self, self.xi_pow(k))


class FieldElement:
    """An element of a FieldCtx with exact arithmetic."""

    __slots__ = ("ctx", "value")

    def __init__(self, ctx: FieldCtx, value: int):
        self.ctx = ctx
        self.value = value

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.ctx is not self.ctx and other.ctx.key != self.ctx.key:
                raise DomainError(f"field mismatch: F_{self.ctx.order} vs F_{other.ctx.order}")
            return other.value
        if isinstance(other, int):
            return self.ctx.from_int(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.div(self.value, o))

    def __rtruediv__(self, other):
        o = self._other(other)
        return NotImplemented if o is NotImplemented else FieldElement(self.ctx, self.ctx.div(o, self.value))

    def __neg__(self):
        return FieldElement(self.ctx, self.ctx.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.ctx, self.ctx.pow(self.value, e))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.ctx.key == other.ctx.key and self.value == other.value
        if isinstance(other, int):
            return self.value == self.ctx.from_int(other)
        return NotImplemented

    def __lt__(self, other: "FieldElement") -> bool:
        return self.value < self._other(other)

    def __hash__(self):
        return hash((self.ctx.key, self.value))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __repr__(self):
        return f"F{self.ctx.order}({self.vec})"

    @property
    def vec(self) -> list[int]:
        return self.ctx.vec(self.value)

    def log(self) -> int:
        return self.ctx.dlog(self.value)

    def inverse(self) -> "FieldElement":
        return FieldElement(self.ctx, self.ctx.inv(self.value))


def _least_primitive(p: int, m: int, modulus: list[int]) -> int:
    order = p**m
    if order == 2:
        return 1
    qm1 = order - 1
    primes = list(factorize(qm1))
    for x in range(2, order):
        xd = _trim(_digits(x, p, m))
        if all(_poly_powmod(xd, qm1 // r, modulus, p) != [1] for r in primes):
            return x
    raise AssertionError("no primitive element")  # pragma: no cover


@functools.lru_cache(maxsize=None)
def _make_field(p: int, m: int, tables: bool) -> FieldCtx:
    modulus = least_irreducible(p, m)
    xi = _least_primitive(p, m, modulus)
    return FieldCtx(p, m, modulus, xi, tables)


def make_field(p: int, m: int = 1, *, require_tables: bool = False) -> FieldCtx:
    """Construct F_{p^m} deterministically.

    The modulus is the monic irreducible of degree m with the least
    coefficient code and ``xi`` is the least element of full order.
    Fields above ``TABLE_LIMIT`` are built table-free unless
    ``require_tables`` is set, in which case CapacityError is raised.
    """
    if not is_prime(p):
        raise DomainError(f"characteristic {p} is not prime")
    if m < 1:
        raise DomainError(f"extension degree {m} < 1")
    order = p**m
    if order > ORDER_LIMIT:
        raise CapacityError(f"F_{p}^{m} exceeds the order limit {ORDER_LIMIT}")
    tables = order <= TABLE_LIMIT
    if require_tables and not tables:
        raise CapacityError(f"F_{order} exceeds the table limit {TABLE_LIMIT}")
    return _make_field(p, m, tables)


def field_of_order(q: int, **kw) -> FieldCtx:
    p, m = prime_power(q)
    return make_field(p, m, **kw)


@functools.lru_cache(maxsize=None)
def _embedding_root(small_key: tuple[int, int], big_key: tuple[int, int]) -> int:
    small = make_field(*small_key)
    big = make_field(*big_key)
    q = small.order
    if small.m == 1:
        return 0  # prime field: the modulus is X, its root is 0
    eta = big.pow(big.xi, big.qm1 // (q - 1))
    roots = []
    x = 1
    for _ in range(q - 1):
        acc = 0
        for c in reversed(small.modulus):
            acc = big.add(big.mul(acc, x), big.from_int(c))
        if acc == 0:
            roots.append(x)
        x = big.mul(x, eta)
    return min(roots)


def subfield_embed(ctx2: FieldCtx, x: FieldElement) -> FieldElement:
    """Embed x from F_q into F_{q^e} (the field ctx2).

    The image of the small field's generator X is the least root of its
    modulus in ctx2, fixed once per pair of fields.
    """
    small = x.ctx
    if small.p != ctx2.p or ctx2.m % small.m != 0:
        raise DomainError(f"F_{small.order} does not embed in F_{ctx2.order}")
    if small.key == ctx2.key:
        return FieldElement(ctx2, x.value)
    beta = _embedding_root(small.key, ctx2.key)
    acc = 0
    for c in reversed(x.vec):
        acc = ctx2.add(ctx2.mul(acc, beta), ctx2.from_int(c))
    return FieldElement(ctx2, acc)


def mu_subgroup(ctx: FieldCtx, q: int) -> list[FieldElement]:
    """The q+1 elements x of F_{q^2} with x^{q+1} = 1, as powers of xi^{q-1}."""
    if q * q != ctx.order:
        raise DomainError(f"|F| = {ctx.order} is not {q}^2")
    g = ctx.pow(ctx.xi, q - 1)
    out, x = [], 1
    for _ in range(q + 1):
        out.append(FieldElement(ctx, x))
        x = ctx.mul(x, g)
    return out


def discrete_log(ctx: FieldCtx, x: FieldElement | int) -> int:
    v = x.value if isinstance(x, FieldElement) else x
    return ctx.dlog(v)
