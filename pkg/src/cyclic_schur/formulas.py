"""Closed-form counts of Schur rings over Z_n for special families of n.

All arithmetic is exact; the rational coefficients appearing in the
(7k+6)/(k+1)-style expressions are checked for exact divisibility and a
violation is reported rather than rounded away.
"""

from dataclasses import dataclass
from functools import lru_cache
from math import comb
from typing import Optional

from .groupcore import divisors, factorize, is_prime, totient


class SideConditionError(ValueError):
    """A formula was invoked outside its stated side conditions."""


@dataclass(frozen=True)
class OmegaRecord:
    """One computed count, with provenance and optional reference check."""

    n: int
    omega: int
    method: str  # "enumerated", "formula:<family>", or "reference"
    reference_match: Optional[bool] = None


def catalan(k: int) -> int:
    """The kth Catalan number, binomial(2k, k) / (k + 1)."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return comb(2 * k, k) // (k + 1)


def schroeder(k: int) -> int:
    """The kth (large) Schroeder number."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    return sum(comb(2 * j, j) // (j + 1) * comb(k + j, 2 * j) for j in range(k + 1))


def _divisor_count(m: int) -> int:
    return len(divisors(m))


def omega_prime(p: int) -> int:
    """Count over Z_p for an odd prime p: the number of divisors of p - 1."""
    if not is_prime(p) or p == 2:
        raise SideConditionError(f"p must be an odd prime, got {p}")
    return _divisor_count(p - 1)


@lru_cache(maxsize=None)
def omega_prime_power(p: int, k: int) -> int:
    """Count over Z_{p^k} for an odd prime p, by the Catalan-weighted recursion."""
    if not is_prime(p):
        raise SideConditionError(f"p must be prime, got {p}")
    if p == 2:
        raise SideConditionError("p = 2 is handled by omega_two_power")
    if k < 1:
        raise SideConditionError(f"k must be >= 1, got {k}")
    x = _divisor_count(p - 1)
    om = [1, x]  # om[j] = count over Z_{p^j}
    for j in range(2, k + 1):
        val = x * om[j - 1]
        for i in range(2, j + 1):
            val += (catalan(i - 1) * x + 1) * om[j - i]
        om.append(val)
    return om[k]


@lru_cache(maxsize=None)
def omega_two_power(k: int) -> int:
    """Count over Z_{2^k}, by the Catalan/Schroeder-weighted recursion."""
    if k < 0:
        raise SideConditionError(f"k must be non-negative, got {k}")
    om = [1, 1, 3]  # base values for 1, 2, 4
    for j in range(3, k + 1):
        val = sum(2**i * om[j - i] for i in range(1, 4))
        val -= catalan(j - 1) + schroeder(j - 1)
        for i in range(4, j + 1):
            coeff = catalan(i - 1) + schroeder(i - 1)
            coeff -= sum(catalan(t) + schroeder(t) for t in range(1, i - 2))
            val += coeff * om[j - i]
        om.append(val)
    return om[k]


def _lattice_size_product(p: int, q: int) -> tuple[int, int]:
    """(|L(U(pq))|, d(p-1) * d(q-1)) via the common-prime product form.

    Primes absent from one of the factorizations of p - 1 and q - 1
    enter with exponent zero.
    """
    fp = dict(factorize(p - 1)) if p > 2 else {}
    fq = dict(factorize(q - 1)) if q > 2 else {}
    lattice = 1
    dd = 1
    for r in sorted(set(fp) | set(fq)):
        k, l = fp.get(r, 0), fq.get(r, 0)
        lattice *= sum(
            totient(r**j) * (k - j + 1) * (l - j + 1) for j in range(min(k, l) + 1)
        )
        dd *= (k + 1) * (l + 1)
    return lattice, dd


def omega_pq(p: int, q: int) -> int:
    """Count over Z_{pq} for distinct primes p, q."""
    if not is_prime(p) or not is_prime(q):
        raise SideConditionError(f"p and q must be prime, got {p}, {q}")
    if p == q:
        raise SideConditionError(f"p and q must be distinct, got {p} twice")
    lattice, dd = _lattice_size_product(p, q)
    return 2 * dd + lattice + 1


def _exact_div(num: int, den: int) -> int:
    if num % den != 0:
        raise SideConditionError(f"{num} is not divisible by {den}; parameter bug")
    return num // den


def _two_adic(p: int) -> tuple[int, int]:
    """Write p - 1 = 2^k * a with a odd; return (k, a)."""
    m = p - 1
    k = 0
    while m % 2 == 0:
        m //= 2
        k += 1
    return k, m


SPECIAL_FAMILIES = ("2p", "3p", "5p", "4p", "2p^2", "2p^3")


def omega_special(family: str, p: int) -> int:
    """Closed forms for n in {2p, 3p, 5p, 4p, 2p^2, 2p^3}, p an odd prime."""
    if not is_prime(p) or p == 2:
        raise SideConditionError(f"p must be an odd prime, got {p}")
    x = _divisor_count(p - 1)
    k, _a = _two_adic(p)
    if family == "2p":
        return 3 * x + 1
    if family == "3p":
        if p == 3:
            raise SideConditionError("3p requires p != 3")
        return _exact_div((7 * k + 6) * x, k + 1) + 1
    if family == "5p":
        if p == 5:
            raise SideConditionError("5p requires p != 5")
        return _exact_div((13 * k + 7) * x, k + 1) + 1
    if family == "4p":
        return _exact_div((15 * k + 14) * x, k + 1) + 3
    if family == "2p^2":
        return 6 * x * x + 7 * x + 4
    if family == "2p^3":
        return 10 * x**3 + 21 * x * x + 31 * x + 6
    raise SideConditionError(f"unknown family {family!r}")
