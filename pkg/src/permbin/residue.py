"""Arithmetic in Z_{q-1} and the orbit action used to define N_d.

Residues are written in {1, ..., q-1}, so q-1 itself stands for the class
of 0.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass

from .errors import DomainError


def normalize(r: int, modulus: int) -> int:
    """Representative of r mod ``modulus`` in {1, ..., modulus}."""
    return r % modulus or modulus


def units(modulus: int) -> list[int]:
    return [t for t in range(1, modulus + 1) if math.gcd(t, modulus) == 1]


def coprime_lift(r: int, dividend: int, step: int) -> int:
    """Least s = r + k*step (k = 0, 1, ...) with gcd(s, dividend) = 1."""
    if step <= 0 or dividend % step:
        raise DomainError(f"step {step} does not divide {dividend}")
    if math.gcd(r, step) != 1:
        raise DomainError(f"gcd({r}, {step}) != 1; no coprime lift exists")
    s = r
    while math.gcd(s, dividend) != 1:
        s += step
    return s


@dataclass(frozen=True)
class OrbitGroup:
    """Units t of Z_{q-1} with t = +-1 mod (q-1)/d, tagged with that sign.

    When (q-1)/d <= 2 the two classes coincide; members are then tagged +1
    and ``ambiguous`` is set, meaning both action rules apply.
    """

    qm1: int
    d: int
    members: tuple[tuple[int, int], ...]

    @property
    def ambiguous(self) -> bool:
        return self.qm1 // self.d <= 2

    def elements(self) -> list[int]:
        return [t for t, _ in self.members]

    def actions(self) -> list[tuple[int, int]]:
        """(t, shift) pairs; t acts by n -> t*n - shift."""
        out = []
        for t, sign in self.members:
            if sign == 1:
                out.append((t, 0))
            if sign == -1 or self.ambiguous:
                out.append((t, self.d))
        return out

    def act(self, t: int, n: int, shift: int) -> int:
        return normalize(t * n - shift, self.qm1)


@functools.lru_cache(maxsize=None)
def orbit_group(qm1: int, d: int) -> OrbitGroup:
    if d <= 0 or qm1 % d:
        raise DomainError(f"d = {d} does not divide q-1 = {qm1}")
    k = qm1 // d
    members = []
    for t in units(qm1):
        r = t % k
        if r == 1 % k:
            members.append((t, 1))
        elif r == k - 1:
            members.append((t, -1))
    return OrbitGroup(qm1, d, tuple(members))


@functools.lru_cache(maxsize=None)
def g_orbits(qm1: int, d: int) -> tuple[tuple[int, ...], ...]:
    """Partition of {1, ..., q-1} into orbits, each sorted, ordered by minimum."""
    group = orbit_group(qm1, d)
    actions = group.actions()
    seen = [False] * (qm1 + 1)
    blocks = []
    for start in range(1, qm1 + 1):
        if seen[start]:
            continue
        block, stack = [start], [start]
        seen[start] = True
        while stack:
            n = stack.pop()
            for t, shift in actions:
                img = group.act(t, n, shift)
                if not seen[img]:
                    seen[img] = True
                    block.append(img)
                    stack.append(img)
        blocks.append(tuple(sorted(block)))
    return tuple(blocks)


@functools.lru_cache(maxsize=None)
def _min_table(qm1: int, d: int) -> tuple[int, ...]:
    table = [0] * (qm1 + 1)
    for block in g_orbits(qm1, d):
        for n in block:
            table[n] = block[0]
    return tuple(table)


def orbit_min(qm1: int, d: int, n: int) -> int:
    """n*: the least element of the orbit of n."""
    return _min_table(qm1, d)[normalize(n, qm1)]
