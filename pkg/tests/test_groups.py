import numpy as np
import pytest

from conftest import normal_orders_bruteforce

from leinster import constructors
from leinster.errors import CapacityError, InputError
from leinster.groups import (
    GroupTable,
    center,
    conjugacy_classes,
    derived_subgroup,
    direct_product,
    element_set,
    is_normal,
    normal_subgroups,
    quotient,
    subgroup_closure,
    sylow,
)


def build(text):
    return constructors.build(constructors.parse_spec(text))


class TestGroupTable:
    def test_validate_accepts_good_tables(self):
        for spec in ("C6", "S3", "D8", "Dic5", "A4"):
            build(spec).validate()

    def test_validate_rejects_broken_table(self):
        t = build("C4").table.copy()
        t[2, 3] = 2  # breaks the Latin-square property
        with pytest.raises(InputError):
            GroupTable(4, table=t, label="broken").validate()

    def test_validate_rejects_nonassociative(self):
        # a quasigroup with identity that is not associative
        t = np.array([[0, 1, 2, 3, 4],
                      [1, 0, 3, 4, 2],
                      [2, 4, 0, 1, 3],
                      [3, 2, 4, 0, 1],
                      [4, 3, 1, 2, 0]])
        with pytest.raises(InputError):
            GroupTable(5, table=t, label="loop").validate()

    def test_identity_and_inverses(self):
        G = build("Dic5")
        e = G.identity
        for g in range(G.order):
            assert G.mul(g, G.inv(g)) == e
            assert G.mul(e, g) == g

    def test_element_orders(self):
        G = build("C12")
        assert sorted(G.element_order(g) for g in range(12)) == [
            1, 2, 3, 3, 4, 4, 6, 6, 12, 12, 12, 12,
        ]

    def test_capacity_cap(self):
        with pytest.raises(CapacityError):
            build("C30000")

    def test_lazy_table_above_cap(self):
        G = build("C3000")  # above the dense-table cap, below the order cap
        assert not G.has_table
        assert G.mul(1, 2999) == 0
        assert G.element_order(1) == 3000


class TestClosureAndClasses:
    def test_subgroup_closure(self):
        G = build("S3xC5")
        H = subgroup_closure(G, [G.order - 1])
        assert H.size in {2, 3, 5, 6, 10, 15, 30}

    def test_closure_of_identity(self):
        G = build("A4")
        assert subgroup_closure(G, [G.identity]).size == 1

    def test_conjugacy_class_sizes(self):
        assert sorted(c.size for c in conjugacy_classes(build("S3")).classes) == [1, 2, 3]
        assert sorted(c.size for c in conjugacy_classes(build("D12")).classes) == [1, 1, 2, 2, 3, 3]
        assert sorted(c.size for c in conjugacy_classes(build("A4")).classes) == [1, 3, 4, 4]
        assert sorted(c.size for c in conjugacy_classes(build("Dic5")).classes) == [
            1, 1, 2, 2, 2, 2, 5, 5,
        ]

    def test_classes_partition_group(self):
        G = build("Dic3")
        cls = conjugacy_classes(G).classes
        seen = sorted(g for c in cls for g in c.to_ids())
        assert seen == list(range(G.order))


class TestInvariantSubgroups:
    def test_center(self):
        assert center(build("A4")).size == 1
        assert center(build("Dic5")).size == 2
        assert center(build("C12")).size == 12
        assert center(build("D8")).size == 2

    def test_derived(self):
        assert derived_subgroup(build("S3")).size == 3
        assert derived_subgroup(build("A4")).size == 4
        assert derived_subgroup(build("Dic5")).size == 5
        assert derived_subgroup(build("C12")).size == 1

    def test_is_normal(self):
        G = build("S3")
        rot = subgroup_closure(G, [3])  # a 3-cycle
        assert rot.size == 3 and is_normal(G, rot)
        flip = subgroup_closure(G, [1])
        assert flip.size == 2 and not is_normal(G, flip)


class TestNormalSubgroups:
    def test_against_bruteforce_oracle(self, oracle_group):
        engine = sorted(N.size for N in normal_subgroups(oracle_group))
        assert engine == normal_orders_bruteforce(oracle_group)

    def test_known_lattices(self):
        assert sorted(N.size for N in normal_subgroups(build("C6"))) == [1, 2, 3, 6]
        assert sorted(N.size for N in normal_subgroups(build("A4"))) == [1, 4, 12]
        assert sorted(N.size for N in normal_subgroups(build("SD(7,8,6)"))) == [
            1, 2, 4, 7, 14, 28, 56,
        ]

    def test_all_results_are_normal(self):
        G = build("D20")
        for N in normal_subgroups(G):
            assert N.is_subgroup
            assert is_normal(G, N)


class TestQuotientSylowProduct:
    def test_quotient(self):
        G = build("Dic5")
        N = next(N for N in normal_subgroups(G) if N.size == 10)
        Q = quotient(G, N)
        Q.validate()
        assert Q.order == 2

    def test_quotient_of_a4(self):
        G = build("A4")
        N = next(N for N in normal_subgroups(G) if N.size == 4)
        Q = quotient(G, N)
        assert sorted(Q.element_order(g) for g in range(3)) == [1, 3, 3]

    def test_quotient_requires_normal(self):
        G = build("S3")
        H = subgroup_closure(G, [1])
        with pytest.raises(InputError):
            quotient(G, H)

    @pytest.mark.parametrize("spec,p,size", [
        ("Dic5", 2, 4), ("Dic5", 5, 5), ("A4", 2, 4), ("A4", 3, 3),
        ("S3xC5", 3, 3), ("S3xC5", 5, 5), ("SD(7,8,6)", 2, 8),
    ])
    def test_sylow(self, spec, p, size):
        G = build(spec)
        P = sylow(G, p)
        assert P.size == size
        assert P.is_subgroup

    def test_sylow_bad_prime(self):
        with pytest.raises(InputError):
            sylow(build("S3"), 5)

    def test_direct_product(self):
        G = direct_product(build("S3"), build("C5"))
        G.validate()
        assert G.order == 30
        assert sorted(N.size for N in normal_subgroups(G)) == [1, 3, 5, 6, 15, 30]

    def test_element_set_serialization(self):
        G = build("C6")
        s = element_set(G, [3, 1, 5])
        assert s.to_ids() == [1, 3, 5]
