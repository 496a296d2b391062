# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test_triangular
~~~~~~~~~~~~~~~~~~~~~

Provides unit tests for triangular algebras and relative partial actions.
"""

import nose.tools as nt

from pcross import algebras, fixtures, triangular
from pcross.actions import validate_action
from pcross.linalg import QQ, Matrix, Subspace
from pcross.utils import HypothesisViolation, MalformedInput, TwistedInput

from . import BaseTest


class TestAssembly(BaseTest):
    def setUp(self):
        self.k = algebras.field_algebra(QQ)

    def test_upper_triangular(self):
        k = self.k
        L = triangular.assemble_triangular(k, triangular.regular_bimodule(k), k)
        ut = algebras.upper_triangular(QQ, 2)
        nt.assert_equal(ut.table(), L.algebra.table())
        nt.assert_equal((1, 0, 0), L.left_corner)
        nt.assert_equal((0, 0, 1), L.right_corner)
        nt.assert_equal(((1,), (2,), (3,)), L.split((1, 2, 3)))
        nt.assert_equal((0, 5, 0), L.join(n=(5,)))
        self.assertPassed(algebras.validate_algebra(L.algebra))

    def test_bimodules(self):
        dual = algebras.dual_numbers(QQ)
        regular = triangular.regular_bimodule(dual)
        self.assertPassed(triangular.validate_bimodule(regular))

        twice = Matrix.identity(QQ, 1).scale(2)
        bimodule = triangular.Bimodule(self.k, self.k, 1, [twice], [twice])
        self.assertFailed(triangular.validate_bimodule(bimodule), "unit")

        with nt.assert_raises(MalformedInput):
            triangular.assemble_triangular(self.k, bimodule, self.k)

        with nt.assert_raises(MalformedInput):
            triangular.Bimodule(self.k, self.k, 1, [], [twice])

    def test_ideals(self):
        L, _ = fixtures.sign_on_bimodule()
        radical = algebras.jacobson_radical(L.algebra)
        components = triangular.decompose_ideal(L, radical)
        nt.assert_equal((0, 1, 0), components.dims)
        nt.assert_is_none(components.generators)
        nt.assert_equal(Subspace(QQ, 3, radical), triangular.reassemble(L, components))

        whole = [L.algebra.unit_vector(i) for i in range(3)]
        components = triangular.decompose_ideal(L, whole)
        nt.assert_equal((1, 1, 1), components.dims)
        nt.assert_equal(((1,), (1,)), components.generators)
        nt.assert_equal(3, triangular.reassemble(L, components).dim)


class TestRelativeActions(BaseTest):
    def test_sign(self):
        L, action = fixtures.sign_on_bimodule()
        self.assertPassed(validate_action(action))
        rel = triangular.extract_component_actions(L, action)
        nt.assert_equal([0, 1], rel.support)
        nt.assert_equal(Matrix.from_rows(QQ, [[-1]]), rel.alpha(1))
        self.assertPassed(triangular.validate_relative(rel))
        self.assertPassed(triangular.globalize_relative(rel))

    def test_corner_swap(self):
        L, swap = fixtures.corner_swap()
        self.assertPassed(validate_action(swap))

        with nt.assert_raises(HypothesisViolation):
            triangular.extract_component_actions(L, swap)

        with nt.assert_raises(HypothesisViolation):
            triangular.triangular_crossed_iso(L, swap)

    def test_twisted(self):
        L, extended = triangular.diagonal_extension(fixtures.twisted_c2_partial())
        nt.assert_true(extended.is_twisted)
        self.assertPassed(validate_action(extended))

        with nt.assert_raises(TwistedInput):
            triangular.extract_component_actions(L, extended)

    def test_broken_compatibility(self):
        L, action = fixtures.sign_on_bimodule()
        rel = triangular.extract_component_actions(L, action)
        rel.maps[1] = Matrix.from_rows(QQ, [[2]])
        self.assertFailed(triangular.validate_relative(rel), "composition")


class TestCrossedProducts(BaseTest):
    def test_sign(self):
        L, action = fixtures.sign_on_bimodule()
        report = triangular.triangular_crossed_iso(L, action)
        self.assertPassed(report)
        nt.assert_equal(["L*G has dimension 6 = 2 + 2 + 2"], report.notes)

    def test_diagonal_extension(self):
        L, extended = triangular.diagonal_extension(fixtures.c3_restriction())
        nt.assert_equal(6, L.algebra.dim)
        self.assertPassed(validate_action(extended))
        report = triangular.triangular_crossed_iso(L, extended)
        self.assertPassed(report)
        nt.assert_equal(["L*G has dimension 12 = 4 + 4 + 4"], report.notes)

        rel = triangular.extract_component_actions(L, extended)
        self.assertPassed(triangular.validate_relative(rel))
        self.assertPassed(triangular.globalize_relative(rel))

    def test_corners(self):
        L, _ = fixtures.sign_on_bimodule()
        identity = Matrix.identity(QQ, 3)
        self.assertPassed(triangular.corner_preserving(L, L, identity))

        k = algebras.field_algebra(QQ)
        split = triangular.assemble_triangular(k, triangular.zero_bimodule(k, k), k)
        flip = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
        report = triangular.corner_preserving(split, split, flip)
        a = split.algebra
        self.assertPassed(algebras.check_algebra_map(a, a, flip))
        self.assertFailed(report, "left")
        self.assertFailed(report, "right")
