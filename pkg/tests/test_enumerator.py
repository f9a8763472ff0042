import pytest

from cyclic_schur.groupcore import divisors
from cyclic_schur.rings import quotient, subring, verify
from cyclic_schur.construct import (
    Section,
    discrete_ring,
    trivial_ring,
    wedge_core,
    wedge_product,
)
from cyclic_schur.enumerator import (
    BudgetError,
    Enumerator,
    brute_force_enumerate,
    classify,
    count_by_core,
)
from cyclic_schur.reference import OMEGA_REFERENCE


def test_enumerate_small_counts(enum):
    for n, expected in [(1, 1), (2, 1), (3, 2), (4, 3), (6, 7), (12, 32)]:
        assert enum.omega(n) == expected


def test_enumerate_z4_exact(enum):
    z2wz2 = wedge_product(discrete_ring(2), discrete_ring(2), Section(4, 2, 2))
    assert set(enum.rings(4)) == {trivial_ring(4), z2wz2, discrete_ring(4)}


def test_reference_agreement_first_40(enum):
    for n in range(1, 41):
        assert enum.omega(n) == OMEGA_REFERENCE[n]


def test_brute_force_counts():
    assert len(brute_force_enumerate(3)) == 2
    assert len(brute_force_enumerate(6)) == 7
    assert len(brute_force_enumerate(2)) == 1


def test_brute_force_ceiling():
    with pytest.raises(BudgetError):
        brute_force_enumerate(11)


def test_oracle_equivalence_small(enum):
    for n in range(1, 9):
        brute = {r.blocks for r in brute_force_enumerate(n)}
        recursive = {r.blocks for r in enum.rings(n)}
        assert brute == recursive


def test_budget_errors():
    small = Enumerator(max_n=10)
    with pytest.raises(BudgetError):
        small.rings(11)
    tight = Enumerator(max_rings=2)
    with pytest.raises(BudgetError):
        tight.rings(6)


def test_every_enumerated_ring_verifies(enum):
    for n in range(1, 31):
        for ring in enum.rings(n):
            assert verify(ring.partition).accepted, ring


def test_enumerated_rings_are_deduplicated(enum):
    for n in range(1, 31):
        rings = enum.rings(n)
        assert len({r.blocks for r in rings}) == len(rings)


def test_closure_under_subring_and_quotient(enum):
    for n in range(1, 31):
        for s in enum.rings(n):
            for e in s.s_divisors:
                assert subring(s, e) in set(enum.rings(e))
                assert quotient(s, e) in set(enum.rings(n // e))


def test_singleton_closure(enum):
    for n in range(1, 31):
        for s in enum.rings(n):
            block_set = set(s.blocks)
            singles = [b[0] for b in s.blocks if len(b) == 1]
            for h in singles:
                for c in s.blocks:
                    assert tuple(sorted((h + x) % n for x in c)) in block_set
            # singletons form an S-subgroup
            assert len(singles) in s.s_divisors
            assert set(singles) == {
                x * (n // len(singles)) for x in range(len(singles))
            }


def test_commuting_square(enum):
    for n in range(1, 31):
        for s in enum.rings(n):
            for e in s.s_divisors:
                sub = subring(s, e)
                for d in sub.s_divisors:
                    if d not in s.s_divisors:
                        continue
                    q = quotient(s, d)
                    if e // d not in q.s_divisors:
                        continue
                    assert quotient(sub, d) == subring(q, e // d)


def test_primitive_rings_classification(enum):
    from cyclic_schur.groupcore import is_prime

    for n in range(2, 31):
        primitive = [
            s for s in enum.rings(n) if s.s_divisors == frozenset({1, n})
        ]
        if is_prime(n):
            assert set(primitive) == set(enum.rings(n))
        else:
            assert primitive == [trivial_ring(n)]


def test_minimal_d_pruning_same_result(enum):
    pruned = Enumerator(minimal_d_only=True)
    for n in range(1, 31):
        assert pruned.rings(n) == enum.rings(n)


def test_determinism_across_instances():
    a = Enumerator()
    b = Enumerator()
    for n in (12, 18, 24):
        assert a.rings(n) == b.rings(n)


def test_classify_trivial(enum):
    c = classify(trivial_ring(6))
    assert c.is_trivial and not c.is_automorphic
    assert not c.is_wedge_decomposable and not c.is_direct_decomposable
    c = classify(trivial_ring(5))
    assert c.is_trivial and c.is_automorphic
    assert c.families == ("trivial", "automorphic")


def test_classify_wedge(enum):
    z2wz2 = wedge_product(discrete_ring(2), discrete_ring(2), Section(4, 2, 2))
    c = classify(z2wz2)
    assert c.is_wedge_decomposable and c.core_order == 2
    assert not c.is_trivial and not c.is_direct_decomposable


def test_classify_direct(enum):
    # the discrete ring over Z_6 is the direct product of its Z_2 and Z_3 parts
    c = classify(discrete_ring(6))
    assert c.is_direct_decomposable and c.is_automorphic


def test_count_by_core_examples(enum):
    assert count_by_core(12, trivial_ring(4), enum) == 2  # = omega(3)
    assert count_by_core(4, discrete_ring(2), enum) == 1
    # an indecomposable ring over Z_n is only its own core
    for n in (6, 12):
        assert count_by_core(n, trivial_ring(n), enum) == 1


def test_count_by_core_primitive_identity(enum):
    # primitive core over Z_d leaves a free choice over Z_{n/d}
    for n in range(2, 31):
        for d in divisors(n):
            if d == 1:
                continue
            primitive = [
                s for s in enum.rings(d) if s.s_divisors == frozenset({1, d})
            ]
            for p in primitive:
                assert count_by_core(n, p, enum) == enum.omega(n // d)


def test_cores_partition_the_ring_set(enum):
    for n in (12, 18, 24):
        cores = {}
        for s in enum.rings(n):
            cores.setdefault(wedge_core(s), 0)
            cores[wedge_core(s)] += 1
        assert sum(cores.values()) == enum.omega(n)
        for core, cnt in cores.items():
            assert count_by_core(n, core, enum) == cnt
