# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test_globalization
~~~~~~~~~~~~~~~~~~~~~~~~

Provides unit tests for enveloping actions.
"""

import nose.tools as nt

from hypothesis import assume, given, settings, strategies as st

from pcross import algebras, fixtures
from pcross.actions import restrict_global, validate_action
from pcross.globalization import EnvelopingPair, embedded_ideal, function_algebra
from pcross.globalization import globalize, verify_enveloping
from pcross.groups import make_cyclic
from pcross.linalg import QQ, Matrix
from pcross.utils import InfiniteGroup, MalformedInput, TwistedInput

from . import BaseTest


class TestGlobalize(BaseTest):
    def test_c3(self):
        action = fixtures.c3_restriction()
        pair = globalize(action)
        t = pair.enveloping.algebra
        nt.assert_equal(3, t.dim)
        nt.assert_true(t.is_commutative())
        nt.assert_true(algebras.is_semisimple(t))
        nt.assert_equal(2, embedded_ideal(pair).dim)
        self.assertPassed(verify_enveloping(pair))

    def test_global_input(self):
        pair = globalize(fixtures.c2_swap())
        nt.assert_equal(2, pair.enveloping.algebra.dim)
        self.assertPassed(verify_enveloping(pair))

    def test_trivial_and_empty(self):
        trivial = fixtures.trivial_action(algebras.field_algebra(QQ), make_cyclic(2))
        nt.assert_equal(1, globalize(trivial).enveloping.algebra.dim)

        pair = globalize(fixtures.c2_on_field())
        nt.assert_equal(2, pair.enveloping.algebra.dim)
        self.assertPassed(verify_enveloping(pair))

    def test_unsupported(self):
        with nt.assert_raises(InfiniteGroup):
            globalize(fixtures.z_transfer())

        with nt.assert_raises(TwistedInput):
            globalize(fixtures.twisted_c2_partial())

    def test_function_algebra(self):
        r = algebras.dual_numbers(QQ)
        functions = function_algebra(r, 3)
        nt.assert_equal(6, functions.dim)
        nt.assert_equal("x@2", functions.names[5])
        self.assertPassed(algebras.validate_algebra(functions))

    @settings(max_examples=20, deadline=None)
    @given(st.integers(min_value=1, max_value=4), st.data())
    def test_restricted_shifts(self, n, data):
        mask = data.draw(st.lists(st.sampled_from([0, 1]), min_size=n, max_size=n))
        assume(any(mask))
        action = restrict_global(fixtures.cyclic_shift(n), mask)
        self.assertPassed(validate_action(action))
        pair = globalize(action)
        nt.assert_equal(n, pair.enveloping.algebra.dim)
        self.assertPassed(verify_enveloping(pair))


class TestVerify(BaseTest):
    def test_supplied(self):
        action = fixtures.c3_restriction()
        pair = EnvelopingPair(action, action.source, action.embedding)
        nt.assert_equal((1, 1, 0), pair.idempotent)
        self.assertPassed(verify_enveloping(pair))

    def test_truncated(self):
        report = verify_enveloping(fixtures.truncated_pair(2))
        self.assertFailed(report, "bijective")
        self.assertFailed(report, "global.automorphism")

    def test_twisted(self):
        action = fixtures.twisted_c2_partial()
        pair = EnvelopingPair(action, action.source, action.embedding)
        self.assertPassed(verify_enveloping(pair))

    def test_wrong_embedding(self):
        action = fixtures.c3_restriction()
        zero = Matrix.zeros(QQ, 3, 2)
        report = verify_enveloping(EnvelopingPair(action, action.source, zero))
        self.assertFailed(report, "injective")

        with nt.assert_raises(MalformedInput):
            EnvelopingPair(action, action.source, Matrix.zeros(QQ, 2, 2))
