# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.formats
~~~~~~~~~~~~~~

JSON instance files. Scalars are exact: integers or "p/q" strings (residues
for GF(p)). A file holds a field, an algebra (or a triangular block), an
optional group and an optional action, given directly or as the restriction
of a global action to a central idempotent.

Examples:
    basic usage::

        >>> text = '''{"version": 1, "field": "Q",
        ...   "algebra": {"dim": 1, "unit": ["1"], "constants": [[0, 0, 0, "1"]]},
        ...   "group": {"kind": "Z"},
        ...   "action": {"idempotents": {"0": ["1"]}}}'''
        >>> instance = loads(text)
        >>> instance.action.support
        [0]
        >>> loads("")
        Traceback (most recent call last):
        pcross.utils.ParseError: line 1: Expecting value
"""

import json

from . import algebras, groups
from .actions import GlobalAction, TwistedPartialAction, restrict_global
from .linalg import FieldSpec, Matrix
from .triangular import Bimodule, assemble_triangular
from .utils import (
    CustomEncoder,
    ParseError,
    PcrossError,
    UnsupportedInstance,
    get_logger,
)

logger = get_logger(__name__)

VERSION = 1
TOP_KEYS = {
    "version",
    "name",
    "field",
    "algebra",
    "triangular",
    "group",
    "action",
    "global",
    "restrict",
}
ALGEBRA_KEYS = {"dim", "names", "unit", "constants"}
GROUP_KEYS = {"kind", "order", "degree", "table", "labels", "identity"}
ACTION_KEYS = {"support", "idempotents", "alpha", "twist", "cofinite"}
GLOBAL_KEYS = {"beta", "twist"}
RESTRICT_KEYS = {"idempotent", "window"}
TRIANGULAR_KEYS = {"left", "right", "bimodule"}
BIMODULE_KEYS = {"dim", "names", "left", "right"}
TWIST_KEYS = {"g", "h", "coords"}


class Instance(object):
    """A parsed instance file

    Attributes:
        field (FieldSpec): The base field.
        algebra (StructureAlgebra): R (or the assembled triangular algebra).
        group (GroupModel): G, or None.
        action (TwistedPartialAction): The partial action, or None.
        global_action (GlobalAction): The global action, or None.
        triangular (TriangularAlgebra): The triangular algebra, or None.
    """

    def __init__(self, field, algebra, **kwargs):
        self.field = field
        self.algebra = algebra
        self.name = kwargs.get("name")
        self.group = kwargs.get("group")
        self.action = kwargs.get("action")
        self.global_action = kwargs.get("global_action")
        self.triangular = kwargs.get("triangular")

    def __repr__(self):
        return "<Instance %s>" % (self.name or "unnamed")


class Parser(object):
    """Reads an instance document, tracking the field path for errors

    Args:
        strict (bool): Reject unknown fields (default: True). Otherwise they
            are logged as warnings.
    """

    def __init__(self, strict=True):
        self.strict = strict
        self.field = None

    def keys(self, block, allowed, path):
        if not isinstance(block, dict):
            raise ParseError("expected an object", path=path)

        for key in sorted(set(block) - allowed):
            where = "%s.%s" % (path, key) if path else key

            if self.strict:
                raise ParseError("unknown field", path=where)

            logger.warning("%s: ignoring unknown field", where)

        return block

    def require(self, block, key, path, kind=None):
        where = "%s.%s" % (path, key) if path else key

        if key not in block:
            raise ParseError("missing field", path=where)

        value = block[key]

        if kind and not isinstance(value, kind):
            raise ParseError("expected %s" % kind.__name__, path=where)

        return value

    def scalar(self, value, path):
        if isinstance(value, bool) or not isinstance(value, (int, str)):
            raise ParseError("scalars are integers or 'p/q' strings", path=path)

        try:
            return self.field(value)
        except PcrossError as err:
            raise ParseError(str(err), path=path)

    def vector(self, values, path, length=None):
        if not isinstance(values, list):
            raise ParseError("expected a list", path=path)

        if length is not None and len(values) != length:
            msg = "expected %i entries, got %i" % (length, len(values))
            raise ParseError(msg, path=path)

        return tuple(self.scalar(v, "%s.%i" % (path, i)) for i, v in enumerate(values))

    def matrix(self, rows, path, n):
        if not isinstance(rows, list) or len(rows) != n:
            raise ParseError("expected %i rows" % n, path=path)

        vectors = [self.vector(r, "%s.%i" % (path, i), n) for i, r in enumerate(rows)]
        return Matrix.from_rows(self.field, vectors, cols=n)

    def parse_field(self, doc):
        try:
            self.field = FieldSpec.from_string(self.require(doc, "field", "", str))
        except ParseError:
            raise
        except PcrossError as err:
            raise ParseError(str(err), path="field")

        return self.field

    def algebra(self, block, path):
        self.keys(block, ALGEBRA_KEYS, path)
        dim = self.require(block, "dim", path, int)
        names = block.get("names")
        unit = self.vector(self.require(block, "unit", path), path + ".unit", dim)
        consts = {}

        for pos, entry in enumerate(self.require(block, "constants", path, list)):
            where = "%s.constants.%i" % (path, pos)

            if not isinstance(entry, list) or len(entry) != 4:
                raise ParseError("entries are [i, j, k, scalar]", path=where)

            i, j, k, c = entry

            if not all(isinstance(x, int) for x in (i, j, k)):
                raise ParseError("indices must be integers", path=where)

            consts.setdefault((i, j), {})[k] = self.scalar(c, where + ".3")

        try:
            return algebras.StructureAlgebra(self.field, dim, consts, unit, names)
        except PcrossError as err:
            raise ParseError(str(err), path=path)

    def group(self, block, path="group"):
        self.keys(block, GROUP_KEYS, path)
        kind = self.require(block, "kind", path, str)

        try:
            if kind == "Z":
                return groups.integers()
            elif kind == "cyclic":
                return groups.make_cyclic(self.require(block, "order", path, int))
            elif kind == "symmetric":
                return groups.make_symmetric(self.require(block, "degree", path, int))
            elif kind == "table":
                table = self.require(block, "table", path, list)
                identity, labels = block.get("identity"), block.get("labels")
                return groups.from_table(table, identity=identity, labels=labels)
        except ParseError:
            raise
        except (PcrossError, TypeError) as err:
            raise ParseError(str(err), path=path)

        msg = "unknown kind %r (use Z, cyclic, symmetric or table)" % kind
        raise ParseError(msg, path=path + ".kind")

    def element(self, group, label, path):
        try:
            return group.element(_as_label(label))
        except PcrossError as err:
            raise ParseError(str(err), path=path)

    def twists(self, entries, group, n, path):
        twist = {}

        for pos, entry in enumerate(entries or []):
            where = "%s.%i" % (path, pos)
            self.keys(entry, TWIST_KEYS, where)
            g = self.element(group, self.require(entry, "g", where), where + ".g")
            h = self.element(group, self.require(entry, "h", where), where + ".h")
            twist[(g, h)] = self.vector(self.require(entry, "coords", where), where, n)

        return twist

    def action(self, block, algebra, group, path="action"):
        self.keys(block, ACTION_KEYS, path)
        n = algebra.dim

        if block.get("cofinite"):
            msg = "infinitely many nonzero D_g cannot be represented"
            raise UnsupportedInstance(msg, witness={"path": path + ".cofinite"})

        idempotents, maps = {}, {}
        raw = self.require(block, "idempotents", path, dict)

        for label, coords in raw.items():
            where = "%s.idempotents.%s" % (path, label)
            g = self.element(group, label, where)
            idempotents[g] = self.vector(coords, where, n)

        for label, rows in (block.get("alpha") or {}).items():
            where = "%s.alpha.%s" % (path, label)
            maps[self.element(group, label, where)] = self.matrix(rows, where, n)

        twist = self.twists(block.get("twist"), group, n, path + ".twist")

        try:
            action = TwistedPartialAction(algebra, group, idempotents, maps, twist)
        except PcrossError as err:
            raise ParseError(str(err), path=path)

        if "support" in block:
            where = path + ".support"
            listed = [self.element(group, g, where) for g in block["support"]]

            if group.sort(listed) != action.support:
                msg = "support %s does not match the nonzero idempotents"
                raise ParseError(msg % block["support"], path=where)

        return action

    def global_action(self, block, algebra, group, path="global"):
        self.keys(block, GLOBAL_KEYS, path)
        n, maps = algebra.dim, {}

        for label, rows in self.require(block, "beta", path, dict).items():
            where = "%s.beta.%s" % (path, label)
            maps[self.element(group, label, where)] = self.matrix(rows, where, n)

        twist = self.twists(block.get("twist"), group, n, path + ".twist")

        try:
            return GlobalAction(algebra, group, maps, twist)
        except PcrossError as err:
            raise ParseError(str(err), path=path)

    def triangular(self, block, path="triangular"):
        self.keys(block, TRIANGULAR_KEYS, path)
        left = self.algebra(self.require(block, "left", path), path + ".left")
        right = self.algebra(self.require(block, "right", path), path + ".right")
        where = path + ".bimodule"
        module = self.keys(self.require(block, "bimodule", path), BIMODULE_KEYS, where)
        m = self.require(module, "dim", where, int)
        lefts = self.require(module, "left", where, list)
        rights = self.require(module, "right", where, list)
        lefts = [
            self.matrix(x, "%s.left.%i" % (where, i), m) for i, x in enumerate(lefts)
        ]
        rights = [
            self.matrix(x, "%s.right.%i" % (where, i), m) for i, x in enumerate(rights)
        ]

        try:
            bimodule = Bimodule(left, right, m, lefts, rights, module.get("names"))
            return assemble_triangular(left, bimodule, right)
        except PcrossError as err:
            raise ParseError(str(err), path=path)

    def parse(self, doc):
        self.keys(doc, TOP_KEYS, "")
        version = doc.get("version", VERSION)

        if version != VERSION:
            raise ParseError("unsupported version %r" % version, path="version")

        field = self.parse_field(doc)
        triangular = None

        if "triangular" in doc:
            if "algebra" in doc:
                raise ParseError("give either algebra or triangular", path="algebra")

            triangular = self.triangular(doc["triangular"])
            algebra = triangular.algebra
        else:
            algebra = self.algebra(self.require(doc, "algebra", ""), "algebra")

        kwargs = {"name": doc.get("name"), "triangular": triangular}

        if "group" in doc:
            group = kwargs["group"] = self.group(doc["group"])
        elif any(key in doc for key in ("action", "global", "restrict")):
            raise ParseError("missing field", path="group")

        if "global" in doc:
            kwargs["global_action"] = self.global_action(doc["global"], algebra, group)

        if "action" in doc:
            kwargs["action"] = self.action(doc["action"], algebra, group)
        elif "restrict" in doc:
            kwargs["action"] = self.restrict(doc, kwargs.get("global_action"))

        return Instance(field, algebra, **kwargs)

    def restrict(self, doc, global_action, path="restrict"):
        block = self.keys(doc["restrict"], RESTRICT_KEYS, path)

        if global_action is None:
            raise ParseError("a restriction needs a global action", path=path)

        n = global_action.algebra.dim
        idem = self.vector(self.require(block, "idempotent", path), path, n)

        try:
            return restrict_global(global_action, idem, window=block.get("window"))
        except PcrossError as err:
            raise ParseError(str(err), path=path)


def _as_label(label):
    if isinstance(label, str) and label.lstrip("-").isdigit():
        return int(label)

    return label


def loads(text, strict=True):
    """Parses an instance document

    Raises:
        ParseError: with the line (syntax errors) or field path
        UnsupportedInstance: the action has infinitely many nonzero ideals
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, line=err.lineno)

    return Parser(strict).parse(doc)


def load(path, strict=True):
    with open(path, encoding="utf-8") as f:
        return loads(f.read(), strict)


def _scalars(vector):
    return [str(c) for c in vector]


def _rows(matrix):
    return [_scalars(r) for r in matrix.row_list()]


def algebra_block(a):
    """The algebra part of an instance document

    Examples:
        >>> from pcross.linalg import QQ
        >>> algebra_block(algebras.dual_numbers(QQ))["constants"]
        [[0, 0, 0, '1'], [0, 1, 1, '1'], [1, 0, 1, '1']]
    """
    constants = [
        [i, j, k, str(c)]
        for (i, j), column in sorted(a.consts.items())
        for k, c in sorted(column.items())
    ]
    return {
        "dim": a.dim,
        "names": list(a.names),
        "unit": _scalars(a.unit),
        "constants": constants,
    }


def group_block(group):
    if not group.is_finite:
        return {"kind": "Z"}

    return {
        "kind": "table",
        "table": [list(row) for row in group.table],
        "labels": list(group.labels),
        "identity": group.e,
    }


def _twist_entries(group, twist):
    return [
        {"g": group.label(g), "h": group.label(h), "coords": _scalars(w)}
        for (g, h), w in sorted(twist.items())
    ]


def action_block(action):
    group = action.group
    label = group.label
    block = {
        "support": [label(g) for g in action.support],
        "idempotents": {label(g): _scalars(action.idem(g)) for g in action.support},
        "alpha": {label(g): _rows(action.alpha(g)) for g in action.support},
    }

    if action.explicit_twists:
        block["twist"] = _twist_entries(group, action.explicit_twists)

    return block


def global_block(b):
    label = b.group.label
    elements = b.group.elements if b.group.is_finite else (1, -1)
    block = {"beta": {label(g): _rows(b.beta(g)) for g in elements}}

    if b.explicit_twists:
        block["twist"] = _twist_entries(b.group, b.explicit_twists)

    return block


def instance_doc(algebra, group=None, action=None, global_action=None, name=None):
    """An instance document for the given objects"""
    doc = {"version": VERSION}

    if name:
        doc["name"] = name

    doc["field"] = str(algebra.field)
    doc["algebra"] = algebra_block(algebra)

    if group is not None:
        doc["group"] = group_block(group)

    if global_action is not None:
        doc["global"] = global_block(global_action)

    if action is not None:
        doc["action"] = action_block(action)

    return doc


def dumps(doc):
    """Deterministic JSON text for a document"""
    return json.dumps(doc, cls=CustomEncoder, indent=2, sort_keys=True) + "\n"


def dump(doc, path):
    with open(path, "w", encoding="utf-8") as f:
        f.write(dumps(doc))
