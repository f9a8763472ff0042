"""The four traditional Schur-ring constructors and wedge machinery.

Trivial and automorphic rings are the atoms; direct products combine
rings over coprime orders through an explicit CRT bijection; wedge
products glue a ring over a subgroup to a ring over a quotient along a
compatible section.  Wedge-decomposability testing and wedge-core
extraction invert these constructions.
"""

from dataclasses import dataclass
from typing import Optional

from .groupcore import CrtIso, UnitSubgroup, divisors, unit_group
from .rings import (
    Blocks,
    SchurRing,
    canonical_blocks,
    quotient_blocks,
    subring,
    subring_blocks,
    verify,
    Partition,
)


@dataclass(frozen=True)
class Section:
    """A section [d, e] of Z_n: the pair of subgroups of orders d <= e."""

    n: int
    d: int
    e: int

    def __post_init__(self):
        if self.e % self.d != 0 or self.n % self.e != 0:
            raise ValueError(f"need d | e | n, got d={self.d}, e={self.e}, n={self.n}")

    @property
    def proper(self) -> bool:
        return 1 < self.d <= self.e < self.n

    @property
    def trivial(self) -> bool:
        return self.d == self.e


def trivial_ring(n: int) -> SchurRing:
    """The partition {{0}, everything else}."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if n == 1:
        return SchurRing.trusted(1, ((0,),))
    return SchurRing.trusted(n, ((0,), tuple(range(1, n))))


def discrete_ring(n: int) -> SchurRing:
    """The partition into singletons (the full group algebra)."""
    return SchurRing.trusted(n, tuple((x,) for x in range(n)))


def automorphic_ring(n: int, h: UnitSubgroup) -> SchurRing:
    """Orbit partition of Z_n under multiplication by a unit subgroup."""
    if h.n != n:
        raise ValueError(f"unit subgroup is over {h.n}, not {n}")
    if n == 1:
        return SchurRing.trusted(1, ((0,),))
    mem = h.members
    if 1 not in mem or any((a * b) % n not in mem for a in mem for b in mem):
        raise ValueError("not closed under multiplication mod n")
    return SchurRing.trusted(n, _orbit_blocks(n, sorted(mem)))


def _orbit_blocks(n: int, units: list[int]) -> Blocks:
    seen = [False] * n
    blocks = []
    for x in range(n):
        if seen[x]:
            continue
        orbit = sorted({(u * x) % n for u in units})
        for y in orbit:
            seen[y] = True
        blocks.append(tuple(orbit))
    return tuple(blocks)


def direct_product(s: SchurRing, t: SchurRing, iso: CrtIso) -> SchurRing:
    """Direct product over Z_n = Z_a x Z_b; classes are CRT products of classes."""
    if iso.a != s.n or iso.b != t.n:
        raise ValueError(
            f"CRT factors ({iso.a}, {iso.b}) do not match ring orders ({s.n}, {t.n})"
        )
    return SchurRing.trusted(iso.n, _direct_blocks(s.blocks, t.blocks, iso))


def _direct_blocks(sb: Blocks, tb: Blocks, iso: CrtIso) -> Blocks:
    blocks = []
    for c in sb:
        for d in tb:
            blocks.append(tuple(sorted(iso.inverse(x, y) for x in c for y in d)))
    return canonical_blocks(blocks)


def wedge_compatible(s: SchurRing, t: SchurRing, sec: Section) -> bool:
    """True iff S over Z_e and T over Z_{n/d} can be glued along [d, e]."""
    if not (sec.proper or sec.trivial):
        raise ValueError(f"section {sec} is neither proper nor trivial")
    if s.n != sec.e:
        raise ValueError(f"left ring is over Z_{s.n}, section needs Z_{sec.e}")
    if t.n != sec.n // sec.d:
        raise ValueError(
            f"right ring is over Z_{t.n}, section needs Z_{sec.n // sec.d}"
        )
    if sec.d not in s.s_divisors or sec.e // sec.d not in t.s_divisors:
        return False
    return quotient_blocks(s, sec.d) == subring_blocks(t, sec.e // sec.d)


def wedge_blocks(s: SchurRing, t: SchurRing, sec: Section) -> Blocks:
    """Classes of the wedge product, without compatibility or axiom checks."""
    n, d, e = sec.n, sec.d, sec.e
    scale = n // e
    q = n // d
    inner = n // e  # elements of the image of Z_e in Z_{n/d} are multiples of n/e
    blocks = [tuple(x * scale for x in b) for b in s.blocks]
    for b in t.blocks:
        if all(x % inner == 0 for x in b):
            continue  # covered by the embedded copy of S
        blocks.append(tuple(sorted(x + j * q for x in b for j in range(d))))
    return canonical_blocks(blocks)


def wedge_product(s: SchurRing, t: SchurRing, sec: Section) -> SchurRing:
    """Wedge product of compatible rings along a section; result is verified."""
    if not wedge_compatible(s, t, sec):
        raise ValueError(f"rings are not wedge-compatible along {sec}")
    blocks = wedge_blocks(s, t, sec)
    report = verify(Partition(sec.n, blocks))
    if not report:
        raise RuntimeError(
            f"wedge product failed axiom {report.axiom}: {report.witness}"
        )
    return SchurRing.trusted(sec.n, blocks)


def is_wedge_decomposable(s: SchurRing) -> Optional[Section]:
    """Least proper section [d, e] witnessing decomposability, or None.

    A witness requires every class to lie inside the order-e subgroup or
    to be a union of cosets of the order-d subgroup.  Search order is
    ascending d, then ascending e.
    """
    n = s.n
    sdivs = sorted(s.s_divisors)
    for d in sdivs:
        if not 1 < d < n:
            continue
        step = n // d
        coset_closed = [
            all((x + step) % n in bs for x in b)
            for b, bs in zip(s.blocks, map(set, s.blocks))
        ]
        for e in sdivs:
            if e < d or e >= n or e % d != 0:
                continue
            inner = n // e
            ok = True
            for b, closed in zip(s.blocks, coset_closed):
                if not closed and b[0] % inner != 0:
                    ok = False
                    break
            if ok:
                return Section(n, d, e)
    return None


def wedge_core(s: SchurRing) -> SchurRing:
    """The maximal wedge-indecomposable Schur subring, re-indexed to its order.

    Selected as the indecomposable subring of maximal order; uniqueness of
    the maximum is asserted at runtime rather than assumed.
    """
    indecomposable = [
        subring(s, e)
        for e in sorted(s.s_divisors)
        if is_wedge_decomposable(subring(s, e)) is None
    ]
    best = indecomposable[-1]  # the order-1 subring guarantees non-emptiness
    for sub in indecomposable:
        if best.n % sub.n != 0:
            raise AssertionError(
                f"indecomposable subrings of incomparable orders {sub.n} and "
                f"{best.n}; maximal core is not unique for {s!r}"
            )
    return best
