# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test_groups
~~~~~~~~~~~~~~~~~

Provides unit tests for finite groups and the integers.
"""

import nose.tools as nt

from hypothesis import given, strategies as st

from pcross import groups
from pcross.utils import InfiniteGroup, MalformedInput, NotASubgroup

from . import BaseTest

orders = st.integers(min_value=1, max_value=8)


class TestGroups(BaseTest):
    def test_cyclic(self):
        c4 = groups.make_cyclic(4)
        nt.assert_equal(4, c4.order)
        nt.assert_equal(3, c4.inv(1))
        nt.assert_equal(("e", "g", "g^2", "g^3"), c4.labels)
        nt.assert_equal(2, c4.element("g^2"))
        nt.assert_equal(4, c4.element_order(1))

        with nt.assert_raises(MalformedInput):
            c4.element("h")

    def test_integers(self):
        z = groups.integers()
        nt.assert_false(z.is_finite)
        nt.assert_is_none(z.order)
        nt.assert_equal(-3, z.inv(3))
        nt.assert_equal("-4", z.label(-4))
        nt.assert_equal(7, z.element("7"))
        self.assertPassed(groups.validate_group(z))

        with nt.assert_raises(InfiniteGroup):
            z.elements

    def test_symmetric(self):
        s3 = groups.make_symmetric(3)
        self.assertPassed(groups.validate_group(s3))
        element_orders = sorted(s3.element_order(g) for g in s3.elements)
        nt.assert_equal([1, 2, 2, 2, 3, 3], element_orders)

        with nt.assert_raises(MalformedInput):
            groups.make_symmetric(5)

    def test_direct_product(self):
        klein = groups.direct_product(groups.make_cyclic(2), groups.make_cyclic(2))
        self.assertPassed(groups.validate_group(klein))
        nt.assert_true(all(klein.mul(g, g) == klein.e for g in klein.elements))
        nt.assert_equal(5, len(groups.subgroups(klein)))

        with nt.assert_raises(InfiniteGroup):
            groups.direct_product(klein, groups.integers())

    def test_broken_tables(self):
        latin = groups.from_table([[0, 1], [1, 1]], identity=0)
        self.assertFailed(groups.validate_group(latin), "latin")

        ranged = groups.from_table([[0, 2], [1, 0]], identity=0)
        self.assertFailed(groups.validate_group(ranged), "range")

    def test_subgroups(self):
        s3 = groups.make_symmetric(3)
        sizes = [len(h) for h in groups.subgroups(s3)]
        nt.assert_equal([1, 2, 2, 2, 3, 6], sizes)
        nt.assert_equal([0, 2], groups.check_subgroup(groups.make_cyclic(4), [2, 0]))

        with nt.assert_raises(NotASubgroup):
            groups.check_subgroup(groups.make_cyclic(4), [0, 1])

    @given(orders)
    def test_cyclic_axioms(self, n):
        self.assertPassed(groups.validate_group(groups.make_cyclic(n)))

    @given(orders)
    def test_cyclic_subgroups(self, n):
        divisors = [d for d in range(1, n + 1) if not n % d]
        found = groups.subgroups(groups.make_cyclic(n))
        nt.assert_equal(divisors, [len(h) for h in found])

    @given(orders, st.data())
    def test_cosets_partition(self, n, data):
        group = groups.make_cyclic(n)
        subgroup = data.draw(st.sampled_from(groups.subgroups(group)))
        cosets = groups.left_cosets(group, subgroup)
        nt.assert_equal(n // len(subgroup), len(cosets))
        nt.assert_equal(list(range(n)), sorted(sum(cosets, [])))
        nt.assert_equal(sorted(subgroup), cosets[0])
