import pytest

from cyclic_schur.groupcore import (
    UnitSubgroup,
    all_unit_subgroups,
    crt_split,
    unit_group,
)
from cyclic_schur.rings import quotient, subring, verify
from cyclic_schur.construct import (
    Section,
    automorphic_ring,
    direct_product,
    discrete_ring,
    is_wedge_decomposable,
    trivial_ring,
    wedge_compatible,
    wedge_core,
    wedge_product,
)


def test_section_validation():
    sec = Section(8, 2, 4)
    assert sec.proper and not sec.trivial
    assert Section(8, 2, 2).trivial
    assert not Section(8, 8, 8).proper
    with pytest.raises(ValueError):
        Section(8, 3, 4)
    with pytest.raises(ValueError):
        Section(8, 2, 6)


def test_trivial_ring():
    assert trivial_ring(6).blocks == ((0,), (1, 2, 3, 4, 5))
    assert trivial_ring(2) == discrete_ring(2)
    assert trivial_ring(1).blocks == ((0,),)


def test_automorphic_ring():
    assert automorphic_ring(5, unit_group(5)) == trivial_ring(5)
    for n in (4, 6, 9):
        assert automorphic_ring(n, UnitSubgroup(n, frozenset({1}))) == discrete_ring(n)
    neg = automorphic_ring(8, UnitSubgroup(8, frozenset({1, 7})))
    assert neg.blocks == ((0,), (1, 7), (2, 6), (3, 5), (4,))
    with pytest.raises(ValueError):
        automorphic_ring(8, UnitSubgroup(8, frozenset({1, 3, 5})))


def test_direct_product():
    iso = crt_split(6, 2, 3)
    p = direct_product(discrete_ring(2), trivial_ring(3), iso)
    assert p.blocks == ((0,), (1, 5), (2, 4), (3,))
    assert direct_product(discrete_ring(2), discrete_ring(3), iso) == discrete_ring(6)
    t = trivial_ring(5)
    assert direct_product(trivial_ring(1), t, crt_split(5, 1, 5)) == t
    with pytest.raises(ValueError):
        direct_product(discrete_ring(3), trivial_ring(3), iso)


def test_wedge_compatible_trivial_section_is_automatic(enum):
    for s in enum.rings(3):
        for t in enum.rings(4):
            assert wedge_compatible(s, t, Section(12, 3, 3))


def test_wedge_compatible_regression_fixtures():
    # section (d=2, e=4) over Z_8: quotient of the left factor by 2 must equal
    # the order-2 subring of the right factor (both over Z_2, necessarily discrete)
    s = discrete_ring(4)
    z2wz2 = wedge_product(
        discrete_ring(2), discrete_ring(2), Section(4, 2, 2)
    )
    sec = Section(8, 2, 4)
    assert wedge_compatible(s, discrete_ring(4), sec) is True
    assert wedge_compatible(s, z2wz2, sec) is True
    assert wedge_compatible(s, trivial_ring(4), sec) is False  # 2 not a T-divisor
    assert wedge_compatible(trivial_ring(4), discrete_ring(4), sec) is False
    with pytest.raises(ValueError):
        wedge_compatible(s, trivial_ring(2), sec)  # order mismatch
    with pytest.raises(ValueError):
        wedge_compatible(trivial_ring(2), discrete_ring(4), sec)


def test_wedge_product():
    w = wedge_product(discrete_ring(2), discrete_ring(2), Section(4, 2, 2))
    assert w.blocks == ((0,), (1, 3), (2,))
    w = wedge_product(trivial_ring(2), trivial_ring(3), Section(6, 2, 2))
    assert w.blocks == ((0,), (1, 2, 4, 5), (3,))
    s = wedge_product(discrete_ring(2), discrete_ring(2), Section(4, 2, 2))
    assert wedge_product(s, trivial_ring(1), Section(4, 4, 4)) == s
    with pytest.raises(ValueError):
        wedge_product(trivial_ring(4), discrete_ring(4), Section(8, 2, 4))


def test_is_wedge_decomposable():
    for n in (4, 6, 12):
        assert is_wedge_decomposable(trivial_ring(n)) is None
    z2wz2 = wedge_product(discrete_ring(2), discrete_ring(2), Section(4, 2, 2))
    assert is_wedge_decomposable(z2wz2) == Section(4, 2, 2)
    assert is_wedge_decomposable(discrete_ring(4)) is None


def test_wedge_core():
    z2wz2 = wedge_product(discrete_ring(2), discrete_ring(2), Section(4, 2, 2))
    assert wedge_core(z2wz2) == discrete_ring(2)
    assert wedge_core(trivial_ring(6)) == trivial_ring(6)
    assert wedge_core(discrete_ring(4)) == discrete_ring(4)


def test_wedge_restriction_and_quotient_identities(enum):
    # subring(S/\T, e) = S and quotient(S/\T, d) = T, over every wedge formed
    for n in (4, 6, 8, 12, 16, 18, 24, 30):
        for sec in _proper_sections(n):
            d, e = sec.d, sec.e
            for s in enum.rings(e):
                if d not in s.s_divisors:
                    continue
                for t in enum.rings(n // d):
                    if e // d not in t.s_divisors:
                        continue
                    if not wedge_compatible(s, t, sec):
                        continue
                    w = wedge_product(s, t, sec)
                    assert e in w.s_divisors and d in w.s_divisors
                    assert subring(w, e) == s
                    assert quotient(w, d) == t


def _proper_sections(n):
    from cyclic_schur.groupcore import divisors

    return [
        Section(n, d, e)
        for d in divisors(n)
        if 1 < d < n
        for e in divisors(n)
        if d <= e < n and e % d == 0
    ]


def test_direct_product_restriction_identities(enum):
    from cyclic_schur.groupcore import unitary_factorizations

    for n in (6, 10, 12, 15, 18, 20, 24, 30):
        for a, b in unitary_factorizations(n):
            iso = crt_split(n, a, b)
            for s in enum.rings(a):
                for t in enum.rings(b):
                    p = direct_product(s, t, iso)
                    assert subring(p, a) == s
                    assert subring(p, b) == t


def test_direct_product_preserves_decomposability(enum):
    from cyclic_schur.groupcore import unitary_factorizations

    for n in (12, 20, 24):
        for a, b in unitary_factorizations(n):
            iso = crt_split(n, a, b)
            for s in enum.rings(a):
                if is_wedge_decomposable(s) is None:
                    continue
                for t in enum.rings(b):
                    p = direct_product(s, t, iso)
                    assert is_wedge_decomposable(p) is not None


def test_discrete_factor_forces_direct_split(enum):
    # if a, b are S-subgroup divisors of a ring over Z_ab with gcd(a,b)=1 and
    # the order-a subring is discrete, the ring is that direct product
    from cyclic_schur.groupcore import unitary_factorizations

    for n in range(2, 31):
        for a, b in unitary_factorizations(n):
            iso = crt_split(n, a, b)
            for s in enum.rings(n):
                for lo, hi in ((a, b), (b, a)):
                    if lo not in s.s_divisors or hi not in s.s_divisors:
                        continue
                    sub = subring(s, lo)
                    if sub != discrete_ring(lo):
                        continue
                    iso2 = crt_split(n, lo, hi)
                    assert s == direct_product(sub, subring(s, hi), iso2)


def test_automorphic_partition_count_matches_unit_lattice():
    for n in range(1, 101):
        partitions = {
            automorphic_ring(n, h).blocks for h in all_unit_subgroups(n)
        }
        assert len(partitions) == len(all_unit_subgroups(n))


def test_automorphic_rings_verify():
    for n in range(1, 41):
        for h in all_unit_subgroups(n):
            ring = automorphic_ring(n, h)
            assert verify(ring.partition).accepted


def test_decomposability_witness_divisor_monotonicity(enum):
    # a witness (d, e) stays a witness when d shrinks to any divisor d' > 1
    from cyclic_schur.groupcore import divisors

    for n in (8, 12, 16, 18, 24, 30):
        for s in enum.rings(n):
            sec = is_wedge_decomposable(s)
            if sec is None:
                continue
            for dp in divisors(sec.d):
                if dp <= 1:
                    continue
                assert _is_witness(s, dp, sec.e)


def _is_witness(s, d, e):
    n = s.n
    step, inner = n // d, n // e
    for b in s.blocks:
        in_h = b[0] % inner == 0
        bs = set(b)
        coset_closed = all((x + step) % n in bs for x in b)
        if not (in_h or coset_closed):
            return False
    return True
