# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test_formats
~~~~~~~~~~~~~~~~~~

Provides unit tests for reading and writing instance files.
"""

import json

import nose.tools as nt

from pcross import fixtures, formats
from pcross.actions import validate_action
from pcross.utils import ParseError, UnsupportedInstance

from . import BaseTest, get_path


def read_doc(name):
    with open(get_path(name), encoding="utf-8") as f:
        return json.load(f)


def reload(doc, strict=True):
    return formats.loads(formats.dumps(doc), strict)


class TestLoad(BaseTest):
    def test_z_transfer(self):
        instance = formats.load(get_path("z-transfer.json"))
        nt.assert_equal("z_transfer", instance.name)
        nt.assert_equal([-1, 0, 1], instance.action.support)
        nt.assert_equal(fixtures.z_transfer().alpha(1), instance.action.alpha(1))
        self.assertPassed(validate_action(instance.action))

    def test_data_files(self):
        instance = formats.load(get_path("c3-restriction.json"))
        dims = [instance.action.ideal(g).dim for g in instance.action.support]
        nt.assert_equal([2, 1, 1], dims)
        nt.assert_is_not_none(instance.global_action)

        instance = formats.load(get_path("upper-triangular.json"))
        nt.assert_is_none(instance.action)
        nt.assert_equal(("e11", "e12", "e22"), instance.algebra.names)

        instance = formats.load(get_path("sign-triangular.json"))
        nt.assert_equal(3, instance.triangular.algebra.dim)
        self.assertPassed(validate_action(instance.action))

    def test_syntax_errors(self):
        with nt.assert_raises(ParseError) as cm:
            formats.loads("")

        nt.assert_equal(1, cm.exception.line)

        with nt.assert_raises(ParseError) as cm:
            formats.loads('{\n  "version": 1,\n}')

        nt.assert_equal(3, cm.exception.line)
        nt.assert_is_none(cm.exception.path)

    def test_field_paths(self):
        doc = read_doc("z-transfer.json")
        doc["algebra"]["unit"] = [1]

        with nt.assert_raises(ParseError) as cm:
            reload(doc)

        nt.assert_equal("algebra.unit", cm.exception.path)

        doc = read_doc("z-transfer.json")
        doc["group"]["kind"] = "dihedral"

        with nt.assert_raises(ParseError) as cm:
            reload(doc)

        nt.assert_equal("group.kind", cm.exception.path)

        doc = read_doc("z-transfer.json")
        doc["action"]["support"] = [0, 1]

        with nt.assert_raises(ParseError) as cm:
            reload(doc)

        nt.assert_equal("action.support", cm.exception.path)

        doc = read_doc("z-transfer.json")
        del doc["group"]

        with nt.assert_raises(ParseError) as cm:
            reload(doc)

        nt.assert_equal("group", cm.exception.path)

    def test_unknown_fields(self):
        doc = read_doc("z-transfer.json")
        doc["colour"] = "blue"
        doc["algebra"]["comment"] = "two idempotents"

        with nt.assert_raises(ParseError) as cm:
            reload(doc)

        nt.assert_equal("colour", cm.exception.path)
        del doc["colour"]

        with nt.assert_raises(ParseError) as cm:
            reload(doc)

        nt.assert_equal("algebra.comment", cm.exception.path)
        doc["colour"] = "blue"
        nt.assert_equal([-1, 0, 1], reload(doc, strict=False).action.support)

    def test_versions_and_scalars(self):
        doc = read_doc("z-transfer.json")
        doc["version"] = 2

        with nt.assert_raises(ParseError) as cm:
            reload(doc)

        nt.assert_equal("version", cm.exception.path)

        doc = read_doc("z-transfer.json")
        doc["algebra"]["unit"] = [1, 1.5]

        with nt.assert_raises(ParseError) as cm:
            reload(doc)

        nt.assert_equal("algebra.unit.1", cm.exception.path)

    def test_cofinite(self):
        doc = read_doc("z-on-field.json")
        doc["action"]["cofinite"] = True

        with nt.assert_raises(UnsupportedInstance):
            reload(doc)


class TestDump(BaseTest):
    def test_actions(self):
        for make in (fixtures.z_transfer, fixtures.c3_restriction, fixtures.gf2_c2):
            action = make()
            doc = formats.instance_doc(action.algebra, action.group, action)
            loaded = reload(doc).action
            nt.assert_equal(action.group, loaded.group)
            nt.assert_equal(action.algebra.table(), loaded.algebra.table())
            nt.assert_equal(action.support, loaded.support)

            for g in action.support:
                nt.assert_equal(action.idem(g), loaded.idem(g))
                nt.assert_equal(action.alpha(g), loaded.alpha(g))

    def test_twisted(self):
        action = fixtures.twisted_c2_partial()
        doc = formats.instance_doc(action.algebra, action.group, action)
        nt.assert_in("twist", doc["action"])
        loaded = reload(doc).action
        nt.assert_true(loaded.is_twisted)
        nt.assert_equal(action.explicit_twists, loaded.explicit_twists)

    def test_global(self):
        b = fixtures.swap()
        doc = formats.instance_doc(b.algebra, b.group, global_action=b, name="swap")
        instance = reload(doc)
        nt.assert_equal("swap", instance.name)
        nt.assert_is_none(instance.action)
        nt.assert_equal(b.beta(1), instance.global_action.beta(1))

    def test_deterministic(self):
        action = fixtures.z_transfer()
        doc = formats.instance_doc(action.algebra, action.group, action)
        text = formats.dumps(doc)
        nt.assert_equal(text, formats.dumps(json.loads(text)))
        nt.assert_true(text.endswith("}\n"))
