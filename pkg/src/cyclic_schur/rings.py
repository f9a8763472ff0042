"""Partition data model for Schur rings over Z_n.

A Schur ring is determined by a partition of Z_n whose classes satisfy
three axioms: the identity class is {0}, classes are closed under
negation as a set system, and the convolution of any two class indicator
vectors is constant on every class.  Partitions are kept in a canonical
form (classes sorted by minimum element, members ascending) so equality
and hashing are structural.
"""

from dataclasses import dataclass
from typing import Iterable, Optional

from .groupcore import ElementSet, divisors

Blocks = tuple[tuple[int, ...], ...]


def canonical_blocks(raw: Iterable[Iterable[int]]) -> Blocks:
    blocks = [tuple(sorted(set(b))) for b in raw]
    blocks.sort(key=lambda b: b[0])
    return tuple(blocks)


class Partition:
    """A canonical partition of Z_n into classes."""

    __slots__ = ("n", "blocks", "_hash")

    def __init__(self, n: int, blocks: Blocks):
        self.n = n
        self.blocks = blocks
        self._hash = hash((n, blocks))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Partition)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"Partition(Z_{self.n}: {body})"


def canonicalize(n: int, raw_blocks: Iterable[Iterable[int]]) -> Partition:
    """Build a canonical partition, rejecting overlaps, gaps, and bad residues."""
    if n < 1:
        raise ValueError(f"modulus must be positive, got {n}")
    seen: dict[int, int] = {}
    cleaned = []
    for b in raw_blocks:
        block = tuple(sorted(set(b)))
        if not block:
            raise ValueError("empty class not allowed")
        for x in block:
            if not 0 <= x < n:
                raise ValueError(f"residue {x} out of range [0, {n})")
            if x in seen:
                raise ValueError(f"residue {x} appears in more than one class")
            seen[x] = 1
        cleaned.append(block)
    if len(seen) != n:
        missing = next(x for x in range(n) if x not in seen)
        raise ValueError(f"residue {missing} is not covered by any class")
    cleaned.sort(key=lambda b: b[0])
    return Partition(n, tuple(cleaned))


def inverse_set(c: ElementSet) -> ElementSet:
    """The negation set {-x mod n : x in C}."""
    return ElementSet(c.n, frozenset((c.n - x) % c.n for x in c.members))


def _inv_block(n: int, block: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(sorted((n - x) % n for x in block))


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of the axiom check; on failure names the axiom and a witness."""

    accepted: bool
    axiom: Optional[int] = None
    witness: Optional[str] = None

    def __bool__(self) -> bool:
        return self.accepted


def verify(p: Partition) -> VerifyReport:
    """Check the three Schur-ring axioms on a canonical partition."""
    n, blocks = p.n, p.blocks
    if blocks[0] != (0,):
        return VerifyReport(False, 1, f"class containing 0 is {blocks[0]}, not {{0}}")
    block_set = set(blocks)
    for b in blocks:
        if _inv_block(n, b) not in block_set:
            return VerifyReport(
                False, 2, f"negation of class {b} is not a class"
            )
    block_of = [0] * n
    for i, b in enumerate(blocks):
        for x in b:
            block_of[x] = i
    for bi in blocks:
        for bj in blocks:
            counts = [0] * n
            for u in bi:
                for v in bj:
                    counts[(u + v) % n] += 1
            for bk in blocks:
                lam = counts[bk[0]]
                for x in bk[1:]:
                    if counts[x] != lam:
                        return VerifyReport(
                            False,
                            3,
                            f"product {bi}*{bj} is not constant on class {bk}: "
                            f"count {lam} at {bk[0]} vs {counts[x]} at {x}",
                        )
    return VerifyReport(True)


class SchurRing:
    """A verified Schur ring over Z_n, identified by its canonical partition.

    Instances cache the element-to-class map, the lattice of S-subgroup
    divisors, and the subring/quotient images used heavily by the
    enumerator.  Values are immutable after construction and safe to
    share across threads.
    """

    __slots__ = (
        "n",
        "blocks",
        "_hash",
        "_block_of",
        "_sdivs",
        "_sub_cache",
        "_quot_cache",
        "_constants",
    )

    def __init__(self, n: int, blocks: Blocks, _trusted: bool = False):
        self.n = n
        self.blocks = blocks
        self._hash = hash((n, blocks))
        self._block_of = None
        self._sdivs = None
        self._sub_cache = {}
        self._quot_cache = {}
        self._constants = None
        if not _trusted:
            report = verify(Partition(n, blocks))
            if not report:
                raise ValueError(
                    f"not a Schur ring (axiom {report.axiom}): {report.witness}"
                )

    @classmethod
    def from_partition(cls, p: Partition) -> "SchurRing":
        return cls(p.n, p.blocks)

    @classmethod
    def trusted(cls, n: int, blocks: Blocks) -> "SchurRing":
        """Wrap blocks known to be a Schur ring (e.g. built by a constructor)."""
        return cls(n, blocks, _trusted=True)

    @property
    def partition(self) -> Partition:
        return Partition(self.n, self.blocks)

    @property
    def rank(self) -> int:
        return len(self.blocks)

    def block_of(self) -> list[int]:
        if self._block_of is None:
            m = [0] * self.n
            for i, b in enumerate(self.blocks):
                for x in b:
                    m[x] = i
            self._block_of = m
        return self._block_of

    @property
    def s_divisors(self) -> frozenset[int]:
        if self._sdivs is None:
            self._sdivs = s_subgroup_divisors(self)
        return self._sdivs

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchurRing)
            and self.n == other.n
            and self.blocks == other.blocks
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        body = ", ".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks)
        return f"SchurRing(Z_{self.n}: {body})"


@dataclass(frozen=True)
class StructureConstants:
    """The multiplicities lambda[i][j][k] of class products in the class basis."""

    r: int
    table: tuple  # r x r x r nested tuples of ints


def structure_constants(ring: SchurRing) -> StructureConstants:
    """Convolution multiplicities of every class pair, cached on the ring."""
    if ring._constants is not None:
        return ring._constants
    n, blocks = ring.n, ring.blocks
    r = len(blocks)
    table = []
    for bi in blocks:
        row = []
        for bj in blocks:
            counts = [0] * n
            for u in bi:
                for v in bj:
                    counts[(u + v) % n] += 1
            lams = []
            for bk in blocks:
                lam = counts[bk[0]]
                for x in bk[1:]:
                    if counts[x] != lam:
                        raise RuntimeError(
                            f"class product not constant on {bk}; input not verified?"
                        )
                lams.append(lam)
            row.append(tuple(lams))
        table.append(tuple(row))
    result = StructureConstants(r, tuple(table))
    ring._constants = result
    return result


def s_subgroup_divisors(p) -> frozenset[int]:
    """Divisors d of n whose order-d subgroup is a union of classes.

    Accepts a Partition or a SchurRing.
    """
    n, blocks = p.n, p.blocks
    block_of = [0] * n
    for i, b in enumerate(blocks):
        for x in b:
            block_of[x] = i
    out = []
    for d in divisors(n):
        step = n // d
        subgroup = range(0, n, step)
        touched = {block_of[x] for x in subgroup}
        if sum(len(blocks[i]) for i in touched) == d:
            out.append(d)
    return frozenset(out)


def subring_blocks(ring: SchurRing, e: int) -> Blocks:
    """Classes inside the order-e subgroup, re-indexed to Z_e."""
    cached = ring._sub_cache.get(e)
    if cached is not None:
        return cached
    n = ring.n
    if e not in ring.s_divisors:
        raise ValueError(f"{e} is not an S-subgroup divisor of {ring!r}")
    step = n // e
    out = tuple(
        tuple(x // step for x in b) for b in ring.blocks if b[0] % step == 0
    )
    ring._sub_cache[e] = out
    return out


def subring(ring: SchurRing, e: int) -> SchurRing:
    """The Schur subring over the order-e subgroup, as a ring over Z_e."""
    return SchurRing.trusted(e, subring_blocks(ring, e))


def quotient_blocks(ring: SchurRing, d: int) -> Blocks:
    """Class images under Z_n -> Z_{n/d}, duplicates merged."""
    cached = ring._quot_cache.get(d)
    if cached is not None:
        return cached
    if d not in ring.s_divisors:
        raise ValueError(f"{d} is not an S-subgroup divisor of {ring!r}")
    q = ring.n // d
    images = {tuple(sorted({x % q for x in b})) for b in ring.blocks}
    out = tuple(sorted(images, key=lambda b: b[0]))
    ring._quot_cache[d] = out
    return out


def quotient(ring: SchurRing, d: int) -> SchurRing:
    """The quotient Schur ring over Z_n / Z_d, as a ring over Z_{n/d}."""
    return SchurRing.trusted(ring.n // d, quotient_blocks(ring, d))


def pullback(n: int, d: int, t: SchurRing) -> Partition:
    """Preimage partition of T over Z_{n/d} under Z_n -> Z_{n/d}.

    The class containing 0 is the full order-d subgroup, so for d > 1 the
    result is only a pre-Schur partition, returned as plain data.
    """
    if d < 1 or n % d != 0:
        raise ValueError(f"{d} does not divide {n}")
    q = n // d
    if t.n != q:
        raise ValueError(f"expected ring over Z_{q}, got Z_{t.n}")
    blocks = tuple(
        tuple(sorted(x + j * q for x in b for j in range(d))) for b in t.blocks
    )
    return Partition(n, canonical_blocks(blocks))
