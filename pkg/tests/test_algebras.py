# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test_algebras
~~~~~~~~~~~~~~~~~~~

Provides unit tests for structure constant algebras.
"""

import nose.tools as nt

from fractions import Fraction

from hypothesis import given, strategies as st

from pcross import algebras
from pcross.groups import make_cyclic
from pcross.linalg import GF, QQ, Matrix, Subspace
from pcross.utils import DimensionMismatch, NotAnIdeal, ParentMismatch
from pcross.utils import UnsupportedField

from . import BaseTest

BLOCKS = {
    "field": algebras.field_algebra,
    "dual": algebras.dual_numbers,
    "ut2": lambda field: algebras.upper_triangular(field, 2),
    "m2": lambda field: algebras.matrix_algebra(field, 2),
    "k3": lambda field: algebras.product_of_fields(field, 3),
}

blocks = st.sampled_from(sorted(BLOCKS))
scalars = st.integers(min_value=-3, max_value=3)


class TestStructure(BaseTest):
    def test_validate(self):
        for make in BLOCKS.values():
            self.assertPassed(algebras.validate_algebra(make(QQ)))

        consts = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {0: 1}, (1, 1): {1: 1}}
        bad = algebras.StructureAlgebra(QQ, 2, consts, (1, 0))
        self.assertFailed(algebras.validate_algebra(bad), "unit")

    def test_constants(self):
        with nt.assert_raises(DimensionMismatch):
            algebras.StructureAlgebra(QQ, 2, {(0, 0): {3: 1}}, (1, 0))

        with nt.assert_raises(DimensionMismatch):
            algebras.StructureAlgebra(QQ, 2, {}, (1,))

    def test_elements(self):
        a = algebras.dual_numbers(QQ)
        x = a.basis_element(1)
        nt.assert_true((x * x).is_zero)
        nt.assert_equal("1 + 2*x", str(a.one + 2 * x))
        nt.assert_equal("1 - x", str(a.one - x))

        with nt.assert_raises(ParentMismatch):
            x * algebras.field_algebra(QQ).one

    def test_center(self):
        nt.assert_equal(1, len(algebras.center(algebras.matrix_algebra(QQ, 2))))
        nt.assert_equal(2, len(algebras.center(algebras.dual_numbers(QQ))))
        nt.assert_equal(1, len(algebras.center(algebras.upper_triangular(QQ, 2))))

    def test_radical(self):
        ut = algebras.upper_triangular(QQ, 2)
        radical = algebras.jacobson_radical(ut)
        nt.assert_equal([(0, 1, 0)], [tuple(int(c) for c in v) for v in radical])
        nt.assert_true(algebras.is_semisimple(algebras.matrix_algebra(QQ, 2)))
        nt.assert_false(algebras.is_semisimple(algebras.dual_numbers(GF(3))))

    def test_radical_small_characteristic(self):
        kc2 = algebras.group_algebra(GF(2), make_cyclic(2))
        nt.assert_equal(1, len(algebras.jacobson_radical(kc2)))

        kc3 = algebras.group_algebra(GF(3), make_cyclic(3))
        nt.assert_equal(2, len(algebras.jacobson_radical(kc3)))

        kc3 = algebras.group_algebra(GF(2), make_cyclic(3))
        nt.assert_true(algebras.is_semisimple(kc3))

        with nt.assert_raises(UnsupportedField):
            algebras.jacobson_radical(algebras.matrix_algebra(GF(2), 2))

    def test_ideals(self):
        ut = algebras.upper_triangular(QQ, 2)
        nt.assert_is_none(algebras.is_two_sided_ideal(ut, [(0, 1, 0)]))
        nt.assert_is_not_none(algebras.is_two_sided_ideal(ut, [(1, 0, 0)]))

        with nt.assert_raises(NotAnIdeal):
            algebras.quotient(ut, [(1, 0, 0)])

        k3 = algebras.product_of_fields(QQ, 3)
        ideal = algebras.ideal_from_idempotent(k3, (0, 1, 1))
        nt.assert_equal(2, ideal.dim)
        nt.assert_in((0, 5, 0), ideal)

    def test_quotient(self):
        ut = algebras.upper_triangular(QQ, 2)
        q, projection = algebras.quotient(ut, algebras.jacobson_radical(ut))
        nt.assert_equal(algebras.product_of_fields(QQ, 2), q)
        nt.assert_equal(("E11", "E22"), q.names)
        nt.assert_equal((2, 3), projection.shape)
        self.assertPassed(algebras.check_algebra_map(ut, q, projection))

    def test_identities(self):
        a = algebras.product_of_fields(QQ, 3)
        nt.assert_equal((1, 1, 0), algebras.ideal_identity(a, [(1, 2, 0), (0, 1, 0)]))
        nt.assert_true(algebras.is_central_idempotent(a, (1, 0, 1)))
        nt.assert_false(algebras.is_central_idempotent(a, (2, 0, 0)))

        inverse = algebras.corner_inverse(a, (2, 4, 0), (1, 1, 0))
        nt.assert_equal((Fraction(1, 2), Fraction(1, 4), 0), inverse)

    def test_algebra_maps(self):
        a = algebras.product_of_fields(QQ, 2)
        swap = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
        self.assertPassed(algebras.check_algebra_map(a, a, swap, bijective=True))

        collapse = Matrix.from_rows(QQ, [[1, 0], [0, 0]])
        report = algebras.check_algebra_map(a, a, collapse, bijective=True)
        self.assertFailed(report, "unit")
        self.assertFailed(report, "bijective")

    def test_subalgebra(self):
        m2 = algebras.matrix_algebra(QQ, 2)
        diagonal = [(1, 0, 0, 0), (0, 0, 0, 1)]
        nt.assert_is_none(algebras.is_subalgebra(m2, diagonal))
        nt.assert_is_not_none(algebras.is_subalgebra(m2, [(0, 1, 0, 0), (0, 0, 1, 0)]))

    @given(blocks, blocks)
    def test_direct_sum(self, first, second):
        a, b = BLOCKS[first](QQ), BLOCKS[second](QQ)
        total = algebras.direct_sum(a, b)
        nt.assert_equal(a.dim + b.dim, total.dim)
        self.assertPassed(algebras.validate_algebra(total))
        radical = algebras.jacobson_radical(total)
        parts = algebras.jacobson_radical(a), algebras.jacobson_radical(b)
        nt.assert_equal(sum(map(len, parts)), len(radical))

    @given(blocks, st.lists(scalars, min_size=4, max_size=4))
    def test_radical_is_nilpotent_ideal(self, name, coeffs):
        a = BLOCKS[name](QQ)
        radical = algebras.jacobson_radical(a)
        nt.assert_is_none(algebras.is_two_sided_ideal(a, radical))
        x = Subspace(QQ, a.dim, radical).combine(coeffs)
        nt.assert_true(algebras.is_nilpotent(a, x))


class TestForms(BaseTest):
    def test_trace_forms(self):
        m2 = algebras.matrix_algebra(QQ, 2)
        search = algebras.find_form(m2, symmetric=True)
        nt.assert_equal("candidate", search.method)
        nt.assert_true(search.exact)
        nt.assert_equal((1, 0, 0, 1), search.form.coords)
        nt.assert_true(search.form.is_symmetric(m2))

    def test_dual_numbers(self):
        a = algebras.dual_numbers(QQ)
        form = algebras.frobenius_form(a)
        nt.assert_true(form.is_nondegenerate(a))
        nt.assert_true(algebras.symmetric_form(a).is_nondegenerate(a))

    def test_no_form(self):
        ut = algebras.upper_triangular(QQ, 2)
        search = algebras.find_form(ut)
        nt.assert_is_none(search.form)
        nt.assert_equal("symbolic", search.method)
        nt.assert_is_none(algebras.symmetric_form(ut))

    def test_group_algebras(self):
        kc2 = algebras.group_algebra(GF(2), make_cyclic(2))
        form = algebras.symmetric_form(kc2)
        nt.assert_true(form.is_nondegenerate(kc2))
        nt.assert_true(form.is_symmetric(kc2))

    def test_to_dict(self):
        search = algebras.find_form(algebras.field_algebra(QQ))
        nt.assert_equal("candidate", search.to_dict()["method"])
        nt.assert_equal(0, search.to_dict()["error_bound"])

    @given(blocks)
    def test_found_forms_are_nondegenerate(self, name):
        a = BLOCKS[name](GF(5))

        for symmetric in (False, True):
            search = algebras.find_form(a, symmetric=symmetric)

            if search.form is not None:
                nt.assert_true(search.form.is_nondegenerate(a))

            if symmetric and search.form is not None:
                nt.assert_true(search.form.is_symmetric(a))
