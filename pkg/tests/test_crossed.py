# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test_crossed
~~~~~~~~~~~~~~~~~~

Provides unit tests for partial crossed products.
"""

import nose.tools as nt

from fractions import Fraction

from pcross import algebras, crossed, fixtures
from pcross.actions import restrict_global, validate_action
from pcross.algebras import upper_triangular
from pcross.groups import make_cyclic
from pcross.linalg import GF, QQ, Matrix
from pcross.utils import HypothesisViolation, InfiniteGroup, MalformedInput
from pcross.utils import NotASubgroup, ParentMismatch

from . import BaseTest


def right_ideal_projection(cp, g, coords):
    """Right multiplication by the idempotent a d_g and a basis of its image"""
    a = cp.as_algebra
    vector = cp.to_vector(crossed.delta(cp.action, g, coords))
    pi = a.right_matrix(vector)
    return pi, pi.columns()


class TestElements(BaseTest):
    def setUp(self):
        self.action = fixtures.z_transfer()

    def test_products(self):
        x = crossed.delta(self.action, 1, (0, 1))
        y = crossed.delta(self.action, -1, (1, 0))
        nt.assert_equal("e2*d[0]", str(x * y))
        nt.assert_equal("e1*d[0]", str(y * x))
        nt.assert_true((x * x).is_zero)

    def test_arithmetic(self):
        x = crossed.delta(self.action, 0, (1, 1))
        y = crossed.delta(self.action, 1, (0, 2))
        nt.assert_equal("(e1 + e2)*d[0] + 2*e2*d[1]", str(x + y))
        nt.assert_equal(y, x * y)
        nt.assert_true((y - y).is_zero)
        nt.assert_equal("0", str(y - y))

    def test_outside_ideal(self):
        with nt.assert_raises(MalformedInput):
            crossed.delta(self.action, 1, (1, 0))

        nt.assert_true(crossed.delta(self.action, 5, (0, 0)).is_zero)

    def test_mixed_actions(self):
        x = crossed.delta(self.action, 0, (1, 1))
        y = crossed.delta(fixtures.z_transfer(), 0, (1, 1))

        with nt.assert_raises(ParentMismatch):
            x * y


class TestCrossedProduct(BaseTest):
    def test_z_transfer(self):
        cp = crossed.build_crossed(fixtures.z_transfer())
        a = cp.as_algebra
        nt.assert_equal(4, cp.dim)
        nt.assert_equal((0, 1, 1, 0), a.unit)
        nt.assert_equal("e1*d[0] + e2*d[0]", a.fmt(a.unit))
        self.assertPassed(algebras.validate_algebra(a))

    def test_dimension(self):
        for name in sorted(fixtures.NAMED):
            action = fixtures.named(name)
            cp = crossed.build_crossed(action)
            dims = [action.ideal(g).dim for g in action.support]
            nt.assert_equal(sum(dims), cp.dim)
            self.assertPassed(algebras.validate_algebra(cp.as_algebra))

    def test_vectors(self):
        cp = crossed.build_crossed(fixtures.c3_restriction())

        for i in range(cp.dim):
            x = cp.basis_element(i)
            nt.assert_equal(x, cp.from_vector(cp.to_vector(x)))

    def test_swap_is_a_matrix_algebra(self):
        a = crossed.build_crossed(fixtures.c2_swap()).as_algebra
        nt.assert_equal(1, len(algebras.center(a)))
        nt.assert_true(algebras.is_semisimple(a))
        nt.assert_is_not_none(algebras.symmetric_form(a))

    def test_modular_group_algebra(self):
        a = crossed.build_crossed(fixtures.gf2_c2()).as_algebra
        nt.assert_equal(1, len(algebras.jacobson_radical(a)))

    def test_twisted(self):
        cp = crossed.build_crossed(fixtures.twisted_c2_partial())
        nt.assert_equal(3, cp.dim)
        self.assertPassed(algebras.validate_algebra(cp.as_algebra))


class TestDecompositions(BaseTest):
    def test_subgroups(self):
        cp = crossed.build_crossed(fixtures.c3_restriction())
        self.assertPassed(crossed.subgroup_decomposition(cp, [0]))
        self.assertPassed(crossed.subgroup_decomposition(cp, [0, 1, 2]))

        with nt.assert_raises(NotASubgroup):
            crossed.subgroup_decomposition(cp, [0, 1])

    def test_integers(self):
        cp = crossed.build_crossed(fixtures.z_transfer())
        report = crossed.subgroup_decomposition(cp, 2)
        self.assertPassed(report)
        nt.assert_equal(["R*H has dimension 2, A has dimension 2"], report.notes)

    def test_quotients(self):
        action = fixtures.trivial_action(upper_triangular(QQ, 2), make_cyclic(2))
        cp = crossed.build_crossed(action)
        nt.assert_equal(2, len(crossed.crossed_ideal(cp, [(0, 1, 0)])))
        self.assertPassed(crossed.quotient_isomorphism(action, [(0, 1, 0)]))

    def test_induced_forms(self):
        for action in (fixtures.c2_swap(), fixtures.dual_trivial_c2()):
            cp = crossed.build_crossed(action)
            form = algebras.frobenius_form(action.algebra)
            induced = crossed.induced_form(cp, form)
            nt.assert_equal("induced", induced.method)
            nt.assert_true(induced.is_nondegenerate(cp.as_algebra))


class TestAveraging(BaseTest):
    def test_regular(self):
        action = fixtures.c2_swap()
        cp = crossed.build_crossed(action)
        rep = crossed.regular_representation(cp.as_algebra)
        self.assertPassed(crossed.validate_representation(rep))
        identity = Matrix.identity(QQ, cp.dim)

        for normalization in crossed.NORMALIZATIONS:
            psi = crossed.maschke_average(action, rep, identity, normalization, cp)
            nt.assert_equal(identity, psi)

    def test_equivariant_projection(self):
        action = fixtures.c2_swap()
        cp = crossed.build_crossed(action)
        rep = crossed.regular_representation(cp.as_algebra)
        pi, submodule = right_ideal_projection(cp, 0, action.ideal(0).basis[0])
        psi = crossed.maschke_average(action, rep, pi, cp=cp)
        nt.assert_equal(pi, psi)
        self.assertPassed(crossed.maschke_check(cp, rep, submodule, psi))

    def test_strictly_partial(self):
        # 1_0 = 1 and 1_1 + 1_2 = 1, so z = 2 and 1/|G| averages N to 2/3 N
        action = fixtures.c3_restriction()
        cp = crossed.build_crossed(action)
        rep = crossed.regular_representation(cp.as_algebra)
        pi, submodule = right_ideal_projection(cp, 0, action.ideal(0).basis[0])

        literal = crossed.maschke_average(action, rep, pi, cp=cp)
        nt.assert_equal(pi.scale(Fraction(2, 3)), literal)
        report = crossed.maschke_check(cp, rep, submodule, literal)
        self.assertFailed(report, "restriction")

        args = (action, rep, pi, "idempotent-sum", cp)
        psi = crossed.maschke_average(*args)
        nt.assert_equal(pi, psi)
        self.assertPassed(crossed.maschke_check(cp, rep, submodule, psi))

    def test_characteristic_divides_order(self):
        action = restrict_global(fixtures.cyclic_shift(3, GF(3)), (1, 1, 0))
        self.assertPassed(validate_action(action))
        nt.assert_equal([0, 1, 2], action.support)
        cp = crossed.build_crossed(action)
        rep = crossed.regular_representation(cp.as_algebra)
        identity = Matrix.identity(action.field, cp.dim)

        with nt.assert_raises(HypothesisViolation) as cm:
            crossed.maschke_average(action, rep, identity, cp=cp)

        nt.assert_equal({"order": 3}, cm.exception.witness)

        args = (action, rep, identity, "idempotent-sum", cp)
        nt.assert_equal(identity, crossed.maschke_average(*args))

    def test_failed_check(self):
        action = fixtures.c2_swap()
        cp = crossed.build_crossed(action)
        rep = crossed.regular_representation(cp.as_algebra)
        pi, submodule = right_ideal_projection(cp, 0, (1, 0))
        report = crossed.maschke_check(cp, rep, submodule, Matrix.identity(QQ, 4))
        self.assertFailed(report, "image")

    def test_hypotheses(self):
        action = fixtures.gf2_c2()
        cp = crossed.build_crossed(action)
        rep = crossed.regular_representation(cp.as_algebra)
        identity = Matrix.identity(action.field, cp.dim)

        for normalization in crossed.NORMALIZATIONS:
            with nt.assert_raises(HypothesisViolation):
                crossed.maschke_average(action, rep, identity, normalization, cp)

        with nt.assert_raises(MalformedInput):
            crossed.maschke_average(action, rep, identity, "mean", cp)

        example = fixtures.z_transfer()
        cp = crossed.build_crossed(example)
        rep = crossed.regular_representation(cp.as_algebra)

        with nt.assert_raises(InfiniteGroup):
            crossed.maschke_average(example, rep, Matrix.identity(QQ, 4), cp=cp)
