"""Complete enumeration of Schur rings over Z_n.

Every Schur ring over a finite cyclic group is traditional: it is the
trivial ring, an orbit ring of a unit subgroup, a direct product over a
coprime factorization, or a wedge product along a proper section.  The
enumerator takes the closure of these four constructions, deduplicating
by canonical partition, and memoizes per order (every subquotient of Z_n
is canonically Z_m).  A brute-force filter over all set partitions serves
as an independent oracle for small n.
"""

import threading
from dataclasses import dataclass
from typing import Iterator, Optional

from .groupcore import (
    all_unit_subgroups,
    crt_split,
    divisors,
    unit_group,
    unitary_factorizations,
)
from .rings import (
    Blocks,
    SchurRing,
    canonicalize,
    quotient_blocks,
    subring_blocks,
    verify,
)
from .construct import (
    Section,
    _direct_blocks,
    _orbit_blocks,
    is_wedge_decomposable,
    trivial_ring,
    wedge_blocks,
    wedge_core,
)

DEFAULT_MAX_N = 128
DEFAULT_MAX_RINGS = 10**6
DEFAULT_ORACLE_CEILING = 10


class BudgetError(Exception):
    """Raised when an enumeration exceeds the configured resource budget."""


@dataclass(frozen=True)
class RingSet:
    """The deduplicated Schur rings over Z_n, in canonical order."""

    n: int
    rings: tuple[SchurRing, ...]

    def __len__(self) -> int:
        return len(self.rings)

    def __iter__(self):
        return iter(self.rings)

    def __contains__(self, ring) -> bool:
        return ring in set(self.rings)


class Enumerator:
    """Memoized recursive enumerator with a resource budget.

    The memo table is keyed by order and guarded by a lock; entries are
    published only once complete, so concurrent table rows can share one
    instance.
    """

    def __init__(
        self,
        max_n: int = DEFAULT_MAX_N,
        max_rings: int = DEFAULT_MAX_RINGS,
        minimal_d_only: bool = False,
    ):
        self.max_n = max_n
        self.max_rings = max_rings
        self.minimal_d_only = minimal_d_only
        self._memo: dict[int, tuple[SchurRing, ...]] = {}
        self._lock = threading.RLock()

    def rings(self, n: int) -> tuple[SchurRing, ...]:
        if n < 1:
            raise ValueError(f"n must be positive, got {n}")
        if n > self.max_n:
            raise BudgetError(f"order {n} exceeds enumeration budget {self.max_n}")
        with self._lock:
            cached = self._memo.get(n)
            if cached is not None:
                return cached
            result = self._enumerate(n)
            self._memo[n] = result
            return result

    def ring_set(self, n: int) -> RingSet:
        return RingSet(n, self.rings(n))

    def omega(self, n: int) -> int:
        return len(self.rings(n))

    def _enumerate(self, n: int) -> tuple[SchurRing, ...]:
        found: dict[Blocks, SchurRing] = {}

        def add(blocks: Blocks):
            if blocks not in found:
                if len(found) >= self.max_rings:
                    raise BudgetError(
                        f"ring count exceeds budget {self.max_rings} at order {n}"
                    )
                found[blocks] = SchurRing.trusted(n, blocks)

        add(trivial_ring(n).blocks)
        for h in all_unit_subgroups(n):
            add(_orbit_blocks(n, sorted(h.members)) if n > 1 else ((0,),))
        for a, b in unitary_factorizations(n):
            iso = crt_split(n, a, b)
            for s in self.rings(a):
                for t in self.rings(b):
                    add(_direct_blocks(s.blocks, t.blocks, iso))
        for d, e in self._sections(n):
            sec = Section(n, d, e)
            left: dict[Blocks, list[SchurRing]] = {}
            for s in self.rings(e):
                if d not in s.s_divisors:
                    continue
                if self.minimal_d_only and not self._minimal_in(d, s.s_divisors):
                    # a wedge over (d, e) is also formed over (d', e) for the
                    # minimal S-subgroup divisor d' | d, so this pair is redundant
                    continue
                left.setdefault(quotient_blocks(s, d), []).append(s)
            if not left:
                continue
            m = e // d
            for t in self.rings(n // d):
                if m not in t.s_divisors:
                    continue
                mates = left.get(subring_blocks(t, m))
                if not mates:
                    continue
                for s in mates:
                    add(wedge_blocks(s, t, sec))
        return tuple(sorted(found.values(), key=lambda r: r.blocks))

    @staticmethod
    def _minimal_in(d: int, sdivs: frozenset[int]) -> bool:
        return not any(1 < dp < d and d % dp == 0 for dp in sdivs)

    def _sections(self, n: int) -> Iterator[tuple[int, int]]:
        # proper sections [d, e] of Z_n, ascending d then ascending e
        for d in divisors(n):
            if not 1 < d < n:
                continue
            for e in divisors(n):
                if d <= e < n and e % d == 0:
                    yield d, e


_shared = Enumerator()


def enumerate_all(n: int, enum: Optional[Enumerator] = None) -> RingSet:
    """All Schur rings over Z_n (module-shared memo unless one is passed)."""
    return (enum or _shared).ring_set(n)


def omega(n: int, enum: Optional[Enumerator] = None) -> int:
    """The number of Schur rings over Z_n."""
    return len(enumerate_all(n, enum).rings)


def _set_partitions(items: list[int]) -> Iterator[list[list[int]]]:
    # restricted-growth order: each element joins an existing part or opens one
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    parts: list[list[int]] = [[first]]

    def rec(i: int) -> Iterator[list[list[int]]]:
        if i == len(rest):
            yield [list(p) for p in parts]
            return
        x = rest[i]
        for p in parts:
            p.append(x)
            yield from rec(i + 1)
            p.pop()
        parts.append([x])
        yield from rec(i + 1)
        parts.pop()

    yield from rec(0)


def brute_force_enumerate(
    n: int, ceiling: int = DEFAULT_ORACLE_CEILING
) -> RingSet:
    """Oracle: filter all set partitions of Z_n \\ {0} by the axiom check.

    The search space is the Bell number B(n-1), so the ceiling (default
    10, i.e. B(9) = 21147 candidates) keeps this as a test oracle only.
    """
    if n > ceiling:
        raise BudgetError(f"order {n} exceeds oracle ceiling {ceiling}")
    accepted = []
    for parts in _set_partitions(list(range(1, n))):
        p = canonicalize(n, [[0]] + parts)
        # cheap inverse-closure pruning before the full convolution check
        block_set = set(p.blocks)
        if any(
            tuple(sorted((n - x) % n for x in b)) not in block_set
            for b in p.blocks
        ):
            continue
        if verify(p):
            accepted.append(SchurRing.trusted(n, p.blocks))
    accepted.sort(key=lambda r: r.blocks)
    return RingSet(n, tuple(accepted))


@dataclass(frozen=True)
class Classification:
    """Family membership flags and wedge-core order of one ring."""

    ring: SchurRing
    is_trivial: bool
    is_automorphic: bool
    is_direct_decomposable: bool
    is_wedge_decomposable: bool
    core_order: int

    @property
    def families(self) -> tuple[str, ...]:
        tags = []
        if self.is_trivial:
            tags.append("trivial")
        if self.is_automorphic:
            tags.append("automorphic")
        if self.is_direct_decomposable:
            tags.append("direct")
        if self.is_wedge_decomposable:
            tags.append("wedge")
        return tuple(tags)


def _stabilizer_units(ring: SchurRing) -> list[int]:
    n = ring.n
    if n == 1:
        return [0]
    block_of = ring.block_of()
    units = []
    for u in unit_group(n).members:
        if all(block_of[(u * x) % n] == block_of[x] for x in range(n)):
            units.append(u)
    return units


def classify(ring: SchurRing) -> Classification:
    """Compute family flags by direct structural tests."""
    n = ring.n
    is_trivial = len(ring.blocks) <= 2
    stab = _stabilizer_units(ring)
    is_automorphic = _orbit_blocks(n, stab) == ring.blocks if n > 1 else True
    is_direct = False
    for a, b in unitary_factorizations(n):
        if a in ring.s_divisors and b in ring.s_divisors:
            iso = crt_split(n, a, b)
            if (
                _direct_blocks(subring_blocks(ring, a), subring_blocks(ring, b), iso)
                == ring.blocks
            ):
                is_direct = True
                break
    witness = is_wedge_decomposable(ring)
    core = wedge_core(ring)
    return Classification(
        ring=ring,
        is_trivial=is_trivial,
        is_automorphic=is_automorphic,
        is_direct_decomposable=is_direct,
        is_wedge_decomposable=witness is not None,
        core_order=core.n,
    )


def count_by_core(
    n: int, core: SchurRing, enum: Optional[Enumerator] = None
) -> int:
    """Number of rings over Z_n whose wedge-core equals the given ring."""
    if n % core.n != 0:
        raise ValueError(f"core order {core.n} does not divide {n}")
    return sum(1 for s in enumerate_all(n, enum) if wedge_core(s) == core)
