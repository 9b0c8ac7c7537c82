import pytest

from conftest import normal_orders_bruteforce

from leinster.analysis import analyze
from leinster.errors import InputError
from leinster.numtheory import is_squarefree
from leinster.squarefree import (
    MetacyclicDescriptor,
    canonical_twist,
    descriptor_normal_orders,
    enumerate_squarefree,
    holder_count,
    realize,
    split_metacyclic_normal_orders,
)


class TestDescriptor:
    def test_cyclic_descriptor(self):
        d = MetacyclicDescriptor(15, 1, 1)
        assert d.order == 15
        assert d.pretty_label() == "C15"

    def test_rejects_non_squarefree(self):
        with pytest.raises(InputError):
            MetacyclicDescriptor(4, 3, 1)

    def test_rejects_unfaithful_twist(self):
        with pytest.raises(InputError):
            MetacyclicDescriptor(7, 6, 6)  # order of 6 mod 7 is 2, not 6

    def test_rejects_non_canonical_twist(self):
        # 3 and 5 generate the same order-6 subgroup of units mod 7;
        # canonical form picks the smaller orbit representative
        assert canonical_twist(7, 6, 5) == canonical_twist(7, 6, 3) == 3
        with pytest.raises(InputError):
            MetacyclicDescriptor(7, 6, 5)

    def test_pretty_labels(self):
        assert MetacyclicDescriptor(3, 2, 2).pretty_label() == "S3"
        assert MetacyclicDescriptor(15, 2, 14).pretty_label() == "D30"
        assert MetacyclicDescriptor(15, 2, 11).pretty_label() == "S3xC5"
        assert MetacyclicDescriptor(7, 3, 2).pretty_label() == "SF(7,3,2)"


class TestEnumeration:
    @pytest.mark.parametrize("n,count", [
        (1, 1), (2, 1), (6, 2), (30, 4), (42, 6), (210, 12), (2310, 36),
    ])
    def test_known_counts(self, n, count):
        assert len(enumerate_squarefree(n)) == count
        assert holder_count(n) == count

    def test_counts_match_formula_up_to_600(self):
        for n in range(1, 601):
            if is_squarefree(n):
                assert len(enumerate_squarefree(n)) == holder_count(n), n

    def test_rejects_non_squarefree(self):
        with pytest.raises(InputError):
            enumerate_squarefree(12)
        with pytest.raises(InputError):
            holder_count(0)

    def test_descriptors_are_distinct_groups(self):
        # all 4 groups of order 30 have distinct normal-order multisets
        descs = enumerate_squarefree(30)
        fingerprints = {tuple(descriptor_normal_orders(d)) for d in descs}
        assert len(fingerprints) == 4


class TestStructuralNormalOrders:
    def test_cyclic_case(self):
        assert split_metacyclic_normal_orders(12, 1, 1) == [1, 2, 3, 4, 6, 12]

    def test_s3(self):
        assert split_metacyclic_normal_orders(3, 2, 2) == [1, 3, 6]

    def test_dicyclic(self):
        assert split_metacyclic_normal_orders(5, 4, 4) == [1, 2, 5, 10, 20]

    def test_non_coprime_rejected(self):
        with pytest.raises(InputError):
            split_metacyclic_normal_orders(4, 2, 3)

    def test_bad_twist_rejected(self):
        with pytest.raises(InputError):
            split_metacyclic_normal_orders(7, 2, 3)

    def test_matches_engine_on_all_squarefree_up_to_200(self):
        for n in range(1, 201):
            if not is_squarefree(n):
                continue
            for d in enumerate_squarefree(n):
                engine = analyze(realize(d))
                assert list(engine.normal_orders) == descriptor_normal_orders(d), d

    def test_matches_bruteforce_oracle_on_tiny_groups(self):
        for n in (6, 10, 12, 20, 21, 30, 42, 56):
            if not is_squarefree(n):
                continue
            for d in enumerate_squarefree(n):
                assert normal_orders_bruteforce(realize(d)) == descriptor_normal_orders(d)

    def test_unfaithful_twist_supported(self):
        # C7 x| C8 acting through the order-2 quotient: t = 6, t^2 = 1 mod 7
        orders = split_metacyclic_normal_orders(7, 8, 6)
        assert sum(orders) == 2 * 56


def test_realize_labels():
    d = MetacyclicDescriptor(15, 2, 11)
    assert realize(d).label == "S3xC5"
