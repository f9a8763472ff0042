"""Arithmetic over Z_n and its unit group U(n).

Z_n is modeled additively as the residues {0, ..., n-1}; its automorphism
group is U(n), the units mod n acting by multiplication.  U(1) is modeled
as the one-element group {0} so that recursions need no special base case.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import gcd


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All divisors of n in ascending order."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return tuple(small + large[::-1])


def totient(m: int) -> int:
    """Euler's totient of m."""
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    result = m
    d = 2
    n = m
    while d * d <= n:
        if n % d == 0:
            while n % d == 0:
                n //= d
            result -= result // d
        d += 1
    if n > 1:
        result -= result // n
    return result


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@lru_cache(maxsize=None)
def factorize(n: int) -> tuple[tuple[int, int], ...]:
    """Prime factorization of n as ((p, e), ...) with p ascending."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            e = 0
            while n % d == 0:
                n //= d
                e += 1
            out.append((d, e))
        d += 1
    if n > 1:
        out.append((n, 1))
    return tuple(out)


@dataclass(frozen=True)
class ElementSet:
    """A subset of Z_n."""

    n: int
    members: frozenset[int]

    def __post_init__(self):
        for m in self.members:
            if not 0 <= m < self.n:
                raise ValueError(f"member {m} out of range [0, {self.n})")

    def __contains__(self, x: int) -> bool:
        return x in self.members

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))

    def union(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.n, self.members | other.members)

    def intersection(self, other: "ElementSet") -> "ElementSet":
        self._check(other)
        return ElementSet(self.n, self.members & other.members)

    def complement(self) -> "ElementSet":
        return ElementSet(self.n, frozenset(range(self.n)) - self.members)

    def _check(self, other: "ElementSet"):
        if self.n != other.n:
            raise ValueError(f"modulus mismatch: {self.n} vs {other.n}")


@dataclass(frozen=True)
class UnitSubgroup:
    """A subgroup of U(n), the units mod n."""

    n: int
    members: frozenset[int]

    def __len__(self) -> int:
        return len(self.members)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.members))


def subgroup_of_order(n: int, d: int) -> ElementSet:
    """The unique subgroup of Z_n of order d: the multiples of n/d."""
    if d < 1 or n % d != 0:
        raise ValueError(f"{d} does not divide {n}")
    step = n // d
    return ElementSet(n, frozenset(range(0, n, step)))


def unit_group(n: int) -> UnitSubgroup:
    """The full unit group U(n); U(1) is the one-element group {0}."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return UnitSubgroup(1, frozenset({0}))
    return UnitSubgroup(n, frozenset(x for x in range(1, n) if gcd(x, n) == 1))


def generated_unit_subgroup(n: int, gens) -> UnitSubgroup:
    """Multiplicative closure of gens together with 1, mod n."""
    if n == 1:
        return unit_group(1)
    for g in gens:
        if gcd(g % n, n) != 1:
            raise ValueError(f"{g} is not a unit mod {n}")
    return UnitSubgroup(n, _closure(n, frozenset(g % n for g in gens)))


def _closure(n: int, gens: frozenset[int]) -> frozenset[int]:
    els = {1}
    frontier = [1]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                c = (a * g) % n
                if c not in els:
                    els.add(c)
                    nxt.append(c)
        frontier = nxt
    return frozenset(els)


@lru_cache(maxsize=None)
def all_unit_subgroups(n: int) -> tuple[UnitSubgroup, ...]:
    """Every subgroup of U(n), each exactly once.

    BFS over joins with cyclic subgroups; U(n) may have rank > 2, so no
    closed formula is assumed.
    """
    if n == 1:
        return (unit_group(1),)
    units = sorted(unit_group(n).members)
    cyclic = {_closure(n, frozenset({u})) for u in units}
    found = {frozenset({1})}
    frontier = list(found)
    while frontier:
        nxt = []
        for h in frontier:
            for c in cyclic:
                if c <= h:
                    continue
                j = _closure(n, h | c)
                if j not in found:
                    found.add(j)
                    nxt.append(j)
        frontier = nxt
    ordered = sorted(found, key=lambda s: (len(s), sorted(s)))
    return tuple(UnitSubgroup(n, s) for s in ordered)


def count_subgroups_rank2(p: int, k: int, l: int) -> int:
    """Number of subgroups of Z_{p^k} x Z_{p^l}."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 0 or l < 0:
        raise ValueError("exponents must be non-negative")
    return sum(
        totient(p**j) * (k - j + 1) * (l - j + 1) for j in range(min(k, l) + 1)
    )


@dataclass(frozen=True)
class CrtIso:
    """The bijection Z_n <-> Z_a x Z_b for a unitary factorization n = ab."""

    n: int
    a: int
    b: int

    def __post_init__(self):
        if self.a * self.b != self.n:
            raise ValueError(f"{self.a} * {self.b} != {self.n}")
        if gcd(self.a, self.b) != 1:
            raise ValueError(f"gcd({self.a}, {self.b}) != 1")

    def forward(self, r: int) -> tuple[int, int]:
        return (r % self.a, r % self.b)

    def inverse(self, ra: int, rb: int) -> int:
        # CRT: x = ra * b * (b^-1 mod a) + rb * a * (a^-1 mod b)
        if self.a == 1:
            return rb % self.n
        if self.b == 1:
            return ra % self.n
        inv_b = pow(self.b, -1, self.a)
        inv_a = pow(self.a, -1, self.b)
        return (ra * self.b * inv_b + rb * self.a * inv_a) % self.n


def crt_split(n: int, a: int, b: int) -> CrtIso:
    """CRT bijection for n = ab with gcd(a, b) = 1."""
    return CrtIso(n, a, b)


def unitary_factorizations(n: int) -> list[tuple[int, int]]:
    """All unordered pairs {a, b} with ab = n, a, b > 1, gcd(a, b) = 1."""
    out = []
    for a in divisors(n):
        b = n // a
        if 1 < a < b and gcd(a, b) == 1:
            out.append((a, b))
    return out
