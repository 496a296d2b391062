# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.actions
~~~~~~~~~~~~~~

Unital twisted partial actions of groups on algebras, global actions, and the
constructions on them: restriction of a global action to an ideal, restriction
to a subgroup, quotients by invariant ideals, the partial fixed ring and the
finite type test

Examples:
    basic usage::

        >>> from pcross import fixtures
        >>> action = fixtures.z_transfer()
        >>> action.support
        [-1, 0, 1]
        >>> validate_action(action).passed
        True
        >>> is_finite_type(action)[0]
        False
        >>> [[str(c) for c in v] for v in fixed_ring(action)]
        [['1', '1']]
"""

from itertools import product

from . import algebras, groups, linalg
from .linalg import Matrix, Subspace, is_zero
from .utils import (
    Report,
    MalformedInput,
    DimensionMismatch,
    InfiniteGroup,
    NotInvariant,
    NotASubgroup,
    UnsupportedInstance,
    get_logger,
)

logger = get_logger(__name__)


class TwistedPartialAction(object):
    """A unital twisted partial action of a group on an algebra R

    D_g is the ideal R 1_g, alpha_g is stored as the matrix of
    x -> alpha_g(x 1_{g^-1}) and so annihilates the complement of D_{g^-1}.

    Args:
        algebra (StructureAlgebra): R.

        group (GroupModel): G.

        idempotents (dict): g -> coordinates of 1_g. Missing or zero entries
            mean D_g = 0; 1_e defaults to 1_R.

        maps (dict): g -> Matrix of alpha_g (alpha_e defaults to the identity).

        twist (dict): (g, h) -> coordinates of w_{g,h} (default: 1_g 1_{gh}).

    Examples:
        >>> from pcross.algebras import field_algebra
        >>> from pcross.groups import make_cyclic
        >>> from pcross.linalg import QQ
        >>> a = TwistedPartialAction(field_algebra(QQ), make_cyclic(2), {})
        >>> a.support, a.is_twisted
        ([0], False)
    """

    def __init__(self, algebra, group, idempotents, maps=None, twist=None):
        self.algebra = algebra
        self.group = group
        field, n = algebra.field, algebra.dim
        self._idems = {}
        self._maps = {}
        self._twist = {}
        self._ideals = {}
        self._inverses = {}
        maps = maps or {}

        for g, coords in idempotents.items():
            coords = field.vector(coords)

            if len(coords) != n:
                msg = "1_%s has %i coordinates, expected %i"
                raise DimensionMismatch(msg % (group.label(g), len(coords), n))

            if not is_zero(coords):
                self._idems[g] = coords

        self._idems.setdefault(group.e, algebra.unit)
        self.support = group.sort(self._idems)

        for g in self.support:
            if g in maps:
                matrix = maps[g]

                if not isinstance(matrix, Matrix):
                    matrix = Matrix.from_rows(field, matrix, cols=n)

                if matrix.shape != (n, n):
                    msg = "alpha_%s has shape %ix%i, expected %ix%i"
                    args = (group.label(g),) + matrix.shape + (n, n)
                    raise DimensionMismatch(msg % args)

                self._maps[g] = matrix
            elif g == group.e:
                self._maps[g] = Matrix.identity(field, n)
            else:
                raise MalformedInput("No map given for %s" % group.label(g))

        for (g, h), coords in (twist or {}).items():
            coords = field.vector(coords)

            if len(coords) != n:
                msg = "w_%s,%s has %i coordinates, expected %i"
                args = (group.label(g), group.label(h), len(coords), n)
                raise DimensionMismatch(msg % args)

            self._twist[(g, h)] = coords

    @property
    def field(self):
        return self.algebra.field

    @property
    def dim(self):
        return self.algebra.dim

    @property
    def is_twisted(self):
        """Whether some explicit twist differs from 1_g 1_{gh}"""
        return any(w != self.default_twist(g, h) for (g, h), w in self._twist.items())

    @property
    def explicit_twists(self):
        return dict(self._twist)

    def idem(self, g):
        return self._idems.get(g, linalg.zero_vector(self.field, self.dim))

    def ideal(self, g):
        """D_g as a subspace"""
        if g not in self._ideals:
            self._ideals[g] = corner(self.algebra, self.idem(g))

        return self._ideals[g]

    def alpha(self, g):
        if g in self._maps:
            return self._maps[g]

        return Matrix.zeros(self.field, self.dim, self.dim)

    def apply(self, g, vector):
        return self.alpha(g).apply(vector)

    def default_twist(self, g, h):
        gh = self.group.mul(g, h)
        return self.algebra.mul_vec(self.idem(g), self.idem(gh))

    def twist(self, g, h):
        if (g, h) in self._twist:
            return self._twist[(g, h)]

        return self.default_twist(g, h)

    def alpha_inverse(self, g):
        """The matrix of x -> alpha_g^-1(x 1_g)

        Raises:
            MalformedInput: alpha_g is not a bijection D_{g^-1} -> D_g
        """
        if g not in self._inverses:
            a, field = self.algebra, self.field
            source = self.ideal(self.group.inv(g))
            n = self.dim

            if not source.dim:
                self._inverses[g] = Matrix.zeros(field, n, n)
                return self._inverses[g]

            basis = Matrix.from_columns(field, source.basis, rows=n)
            restricted = self.alpha(g) * basis
            columns = []

            for i in range(n):
                target = a.mul_vec(a.unit_vector(i), self.idem(g))
                coords = linalg.solve(restricted, target)

                if coords is None:
                    msg = "alpha_%s does not map onto D_%s"
                    label = self.group.label(g)
                    raise MalformedInput(msg % (label, label), witness={"g": label})

                columns.append(basis.apply(coords))

            self._inverses[g] = Matrix.from_columns(field, columns, rows=n)

        return self._inverses[g]

    def pairs(self):
        """(g, h) with D_g and D_{gh} both nonzero"""
        inv, mul = self.group.inv, self.group.mul
        found = {(g, mul(inv(g), k)) for g in self.support for k in self.support}
        return sorted(found)

    def __repr__(self):
        return "<TwistedPartialAction of %r on %r, support %s>" % (
            self.group,
            self.algebra,
            [self.group.label(g) for g in self.support],
        )


def corner(a, e):
    """The ideal (or corner) R e as a subspace"""
    return Subspace(a.field, a.dim, a.right_matrix(a.field.vector(e)).columns())


def validate_action(a, deep=True):
    """Checks the twisted partial action axioms exactly on ideal bases

    Args:
        a (TwistedPartialAction): The action.
        deep (bool): Also validate the underlying algebra and group.

    Returns:
        Report: each failure is tagged by the axiom and carries a witness

    Examples:
        >>> from pcross import fixtures
        >>> report = validate_action(fixtures.z_transfer(sign=-1))
        >>> report.passed
        False
        >>> report.first("multiplicative")["witness"]
        {'g': '1', 'x': 'e1', 'y': 'e1'}
    """
    report = Report("action")
    r, group, field = a.algebra, a.group, a.field
    label = group.label
    mul, inv = r.mul_vec, group.inv

    if deep:
        report.merge(algebras.validate_algebra(r), prefix="algebra")
        report.merge(groups.validate_group(group), prefix="group")

    e = group.e
    identity = Matrix.identity(field, a.dim)
    report.check(a.idem(e) == r.unit, "i", "1_e is not the unit", g=label(e))
    report.check(a.alpha(e) == identity, "i", "alpha_e is not the identity", g=label(e))
    inverses = {}

    for g in a.support:
        one_g = a.idem(g)
        g_inv = inv(g)
        source = a.ideal(g_inv)
        matrix = a.alpha(g)

        if not algebras.is_central_idempotent(r, one_g):
            msg = "1_%s is not a central idempotent" % label(g)
            report.fail("idempotent", msg, g=label(g), element=r.fmt(one_g))
            continue

        if g_inv not in a.support:
            msg = "%s is supported but %s is not" % (label(g), label(g_inv))
            report.fail("support", msg, g=label(g))
            continue

        projected = matrix * r.right_matrix(a.idem(g_inv))

        if projected != matrix:
            msg = "alpha_%s does not vanish off D_%s" % (label(g), label(g_inv))
            report.fail("annihilation", msg, g=label(g))

        image = Subspace(field, a.dim, [matrix.apply(v) for v in source.basis])

        if image != a.ideal(g) or image.dim != source.dim:
            msg = "alpha_%s maps D_%s onto a space of dimension %i, not D_%s"
            args = (label(g), label(g_inv), image.dim, label(g))
            report.fail("bijective", msg % args, g=label(g), image_dim=image.dim)
            continue

        for x, y in product(source.basis, repeat=2):
            if matrix.apply(mul(x, y)) != mul(matrix.apply(x), matrix.apply(y)):
                msg = "alpha_%s(x y) != alpha_%s(x) alpha_%s(y)" % ((label(g),) * 3)
                report.fail("multiplicative", msg, g=label(g), x=r.fmt(x), y=r.fmt(y))
                break

        report.check(
            matrix.apply(a.idem(g_inv)) == one_g,
            "unit",
            "alpha_%s(1_%s) != 1_%s" % (label(g), label(g_inv), label(g)),
            g=label(g),
        )

    if not report.passed:
        return report

    # twists live in D_g D_gh and are invertible there
    for g, h in a.pairs():
        gh = group.mul(g, h)
        e_gh = mul(a.idem(g), a.idem(gh))
        w = a.twist(g, h)
        witness = {"g": label(g), "h": label(h)}

        if mul(w, e_gh) != w:
            msg = "w_%s,%s is not in D_g D_gh" % (label(g), label(h))
            report.fail("twist", msg, **witness)
            continue

        w_inv = algebras.corner_inverse(r, w, e_gh)

        if w_inv is None:
            msg = "w_%s,%s is not invertible in D_g D_gh" % (label(g), label(h))
            report.fail("twist", msg, **witness)
        else:
            inverses[(g, h)] = w_inv

    pairs = set(a.pairs())

    for (g, h), w in a.explicit_twists.items():
        if (g, h) not in pairs and not is_zero(w):
            msg = "w_%s,%s must vanish since D_g D_gh = 0" % (label(g), label(h))
            report.fail("twist", msg, g=label(g), h=label(h))

    for g in a.support:
        report.check(
            a.twist(g, e) == a.idem(g) and a.twist(e, g) == a.idem(g),
            "iv",
            "w_%s,e and w_e,%s must equal 1_%s" % ((label(g),) * 3),
            g=label(g),
        )

    _check_intersections(a, report)

    if not report.passed:
        return report

    _check_composition(a, report, inverses)
    _check_cocycle(a, report)
    return report


def _check_intersections(a, report):
    """alpha_g(D_{g^-1} n D_h) = D_g n D_{gh}"""
    r, group = a.algebra, a.group
    label, mul = group.label, r.mul_vec

    for g in a.support:
        g_inv = group.inv(g)
        hs = set(a.support) | {group.mul(g_inv, s) for s in a.support}

        for h in group.sort(hs):
            gh = group.mul(g, h)
            source = corner(r, mul(a.idem(g_inv), a.idem(h)))
            image = Subspace(r.field, r.dim, [a.apply(g, v) for v in source.basis])
            target = corner(r, mul(a.idem(g), a.idem(gh)))

            if image != target:
                msg = "alpha_%s(D_%s n D_%s) != D_%s n D_%s"
                args = (label(g), label(g_inv), label(h), label(g), label(gh))
                report.fail("ii", msg % args, g=label(g), h=label(h))
                return


def _check_composition(a, report, inverses):
    """alpha_g alpha_h(x) = w_{g,h} alpha_gh(x) w_{g,h}^-1"""
    r, group = a.algebra, a.group
    label, mul = group.label, r.mul_vec

    for h, k in product(a.support, repeat=2):
        g = group.mul(k, group.inv(h))
        w_inv = inverses.get((g, h))
        w = a.twist(g, h)
        domain = corner(r, mul(a.idem(group.inv(h)), a.idem(group.inv(k))))

        for x in domain.basis:
            left = a.apply(g, a.apply(h, x))

            if w_inv is None:
                right = linalg.zero_vector(r.field, r.dim)
            else:
                right = mul(mul(w, a.apply(k, x)), w_inv)

            if left != right:
                names = (label(g), label(h), label(k))
                msg = "alpha_%s alpha_%s(x) != w alpha_%s(x) w^-1" % names
                report.fail("iii", msg, g=label(g), h=label(h), x=r.fmt(x))
                return


def _check_cocycle(a, report):
    """alpha_g(x w_{h,t}) w_{g,ht} = alpha_g(x) w_{g,h} w_{gh,t}"""
    r, group = a.algebra, a.group
    label, mul, gmul = group.label, r.mul_vec, group.mul

    for g, h, s in product(a.support, repeat=3):
        t = gmul(group.inv(h), s)
        e = mul(mul(a.idem(group.inv(g)), a.idem(h)), a.idem(s))

        for x in corner(r, e).basis:
            left = mul(a.apply(g, mul(x, a.twist(h, t))), a.twist(g, s))
            right = mul(mul(a.apply(g, x), a.twist(g, h)), a.twist(gmul(g, h), t))

            if left != right:
                names = (label(g), label(h), label(t))
                msg = "cocycle identity fails for (%s, %s, %s)" % names
                report.fail("v", msg, g=names[0], h=names[1], t=names[2], x=r.fmt(x))
                return


class GlobalAction(object):
    """A twisted global action of G on an algebra T by automorphisms

    For the integers only beta_1 and beta_-1 are stored; beta_n is a power.

    Args:
        algebra (StructureAlgebra): T.
        group (GroupModel): G.
        maps (dict): g -> Matrix of beta_g (beta_e defaults to the identity).
            For the integers: {1: beta_1, -1: beta_-1}; beta_-1 defaults to
            the inverse of beta_1.
        twist (dict): (g, h) -> coordinates of u_{g,h} (default: 1_T).

    Examples:
        >>> from pcross import fixtures
        >>> shift = fixtures.cyclic_shift(3)
        >>> print(shift.beta(2))
        [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    """

    def __init__(self, algebra, group, maps, twist=None):
        self.algebra = algebra
        self.group = group
        field, n = algebra.field, algebra.dim
        self._maps = {}
        self._twist = {}

        for g, matrix in maps.items():
            if not isinstance(matrix, Matrix):
                matrix = Matrix.from_rows(field, matrix, cols=n)

            if matrix.shape != (n, n):
                msg = "beta_%s has shape %ix%i" % ((group.label(g),) + matrix.shape)
                raise DimensionMismatch(msg)

            self._maps[g] = matrix

        self._maps.setdefault(group.e, Matrix.identity(field, n))

        if group.is_finite:
            missing = [group.label(g) for g in group.elements if g not in self._maps]

            if missing:
                raise MalformedInput("No map given for %s" % ", ".join(missing))
        elif 1 not in self._maps:
            raise MalformedInput("A global action of Z needs beta_1")
        elif -1 not in self._maps:
            self._maps[-1] = linalg.inverse(self._maps[1])

        for key, coords in (twist or {}).items():
            self._twist[key] = field.vector(coords)

    @property
    def field(self):
        return self.algebra.field

    @property
    def is_twisted(self):
        return any(u != self.algebra.unit for u in self._twist.values())

    @property
    def explicit_twists(self):
        return dict(self._twist)

    def beta(self, g):
        if g not in self._maps:
            if self.group.is_finite:
                raise MalformedInput("Unknown group element %r" % (g,))

            step = self._maps[1 if g > 0 else -1]
            self._maps[g] = self.beta(g - 1 if g > 0 else g + 1) * step

        return self._maps[g]

    def apply(self, g, vector):
        return self.beta(g).apply(vector)

    def twist(self, g, h):
        return self._twist.get((g, h), self.algebra.unit)

    def elements(self, window=2):
        """All of G, or -window..window for the integers"""
        if self.group.is_finite:
            return self.group.elements

        return tuple(range(-window, window + 1))

    def __repr__(self):
        return "<GlobalAction of %r on %r>" % (self.group, self.algebra)


def validate_global(b, window=2):
    """Checks beta_e = id, automorphisms, beta_g beta_h = u beta_gh u^-1 and the
    cocycle identity (over -window..window for the integers)

    Examples:
        >>> from pcross import fixtures
        >>> validate_global(fixtures.cyclic_shift(3)).passed
        True
        >>> validate_global(fixtures.truncated_shift(2)).axioms[0]
        'automorphism'
    """
    report = Report("global action")
    t, group = b.algebra, b.group
    label, mul = group.label, t.mul_vec
    elements = b.elements(window)
    identity = Matrix.identity(b.field, t.dim)
    report.check(b.beta(group.e) == identity, "identity", "beta_e is not the identity")

    for g in elements:
        name = "beta_%s" % label(g)
        check = algebras.check_algebra_map(t, t, b.beta(g), bijective=True, name=name)

        if not check.passed:
            first = check.failures[0]
            msg = "%s is not an automorphism: %s" % (name, first["message"])
            report.fail("automorphism", msg, g=label(g), **first["witness"])

    if not report.passed:
        return report

    inverses = {}

    for g, h in product(elements, repeat=2):
        u = b.twist(g, h)
        u_inv = algebras.corner_inverse(t, u, t.unit)

        if u_inv is None:
            report.fail("twist", "u_%s,%s is not invertible" % (label(g), label(h)))
            continue

        inverses[(g, h)] = u_inv
        gh = group.mul(g, h)

        for i in range(t.dim):
            x = t.unit_vector(i)
            left = b.apply(g, b.apply(h, x))
            right = mul(mul(u, b.apply(gh, x)), u_inv)

            if left != right:
                names = (label(g), label(h), label(gh))
                msg = "beta_%s beta_%s != Ad(u) beta_%s" % names
                report.fail("composition", msg, g=label(g), h=label(h), x=t.names[i])
                break

    for g in elements:
        report.check(
            b.twist(g, group.e) == t.unit and b.twist(group.e, g) == t.unit,
            "normalized",
            "u_%s,e and u_e,%s must be 1" % (label(g), label(g)),
            g=label(g),
        )

    for g, h, s in product(elements, repeat=3):
        gh, hs = group.mul(g, h), group.mul(h, s)
        left = mul(b.apply(g, b.twist(h, s)), b.twist(g, hs))
        right = mul(b.twist(g, h), b.twist(gh, s))

        if left != right:
            names = (label(g), label(h), label(s))
            msg = "cocycle fails at (%s, %s, %s)" % names
            report.fail("cocycle", msg, triple=names)
            break

    return report


def global_as_partial(b):
    """A global action of a finite group as a partial action with D_g = T"""
    if not b.group.is_finite:
        raise InfiniteGroup("A global action of Z has infinite support")

    t, group = b.algebra, b.group
    idempotents = {g: t.unit for g in group.elements}
    maps = {g: b.beta(g) for g in group.elements}
    twist = b.explicit_twists
    return TwistedPartialAction(t, group, idempotents, maps, twist)


def _ideal_names(t, basis, pivots):
    names = []

    for k, (v, p) in enumerate(zip(basis, pivots)):
        if v == t.unit_vector(p):
            names.append(t.names[p])
        else:
            names.append("r%i" % (k + 1))

    return names


def restrict_global(b, idem, window=None):
    """Restricts a global action to the ideal R = T 1_R

    D_g = R 1_R beta_g(1_R), alpha_g = beta_g on D_{g^-1} and
    w_{g,h} = u_{g,h} 1_R beta_g(1_R) beta_gh(1_R). R is given the canonical
    (rref) basis of T 1_R, coordinates being read at the pivot columns.

    Args:
        b (GlobalAction): The global action on T.
        idem (Sequence): A central idempotent of T.
        window (int): For the integers, D_n is computed for |n| <= window
            (default: dim T).

    Returns:
        TwistedPartialAction: with an `embedding` attribute (the Matrix of
        R -> T)

    Raises:
        MalformedInput: `idem` is not a central idempotent
        UnsupportedInstance: the integers act with infinite support on R

    Examples:
        >>> from pcross import fixtures
        >>> a = restrict_global(fixtures.cyclic_shift(3), (1, 1, 0))
        >>> a.support, [a.ideal(g).dim for g in a.support]
        ([0, 1, 2], [2, 1, 1])
        >>> validate_action(a).passed
        True
    """
    t, group, field = b.algebra, b.group, b.field
    idem = field.vector(idem)
    mul = t.mul_vec

    if not algebras.is_central_idempotent(t, idem):
        msg = "%s is not a central idempotent" % t.fmt(idem)
        raise MalformedInput(msg, witness={"element": t.fmt(idem)})

    ideal = corner(t, idem)
    basis, pivots = ideal.basis, ideal.pivots

    def coords(vector):
        return tuple(vector[p] for p in pivots)

    consts = {}

    for i, j in product(range(len(basis)), repeat=2):
        consts[(i, j)] = dict(enumerate(coords(mul(basis[i], basis[j]))))

    names = _ideal_names(t, basis, pivots)
    r = algebras.StructureAlgebra(field, len(basis), consts, coords(idem), names=names)

    if group.is_finite:
        elements = group.elements
    else:
        window = t.dim if window is None else window
        elements = range(-window, window + 1)

        # an automorphism beta_1 permutes at most dim T primitive central
        # idempotents, so an infinite support recurs within dim T steps
        for n in range(window + 1, window + t.dim + 1):
            for g in (n, -n):
                if not is_zero(mul(idem, b.apply(g, idem))):
                    msg = "D_%i is nonzero outside -%i..%i: the support is infinite"
                    msg %= (g, window, window)
                    raise UnsupportedInstance(msg, witness={"n": g})

    idems = {}

    for g in elements:
        one_g = mul(idem, b.apply(g, idem))

        if not is_zero(one_g):
            idems[g] = one_g

    maps, twist = {}, {}

    for g in idems:
        g_inv = group.inv(g)
        inv_idem = idems.get(g_inv, linalg.zero_vector(field, t.dim))
        columns = [coords(b.apply(g, mul(v, inv_idem))) for v in basis]
        maps[g] = Matrix.from_columns(field, columns, rows=len(basis))

    if b.is_twisted:
        for g, h in product(idems, repeat=2):
            gh = group.mul(g, h)
            w = mul(mul(mul(b.twist(g, h), idem), b.apply(g, idem)), b.apply(gh, idem))
            twist[(g, h)] = coords(w)

    idempotents = {g: coords(v) for g, v in idems.items()}
    action = TwistedPartialAction(r, group, idempotents, maps, twist)
    action.embedding = Matrix.from_columns(field, basis, rows=t.dim)
    action.source = b
    logger.debug("restricted %r to %s: support %s", b, t.fmt(idem), action.support)
    return action


def restrict_subgroup(a, subgroup):
    """Restricts an action to a subgroup H (the support is filtered to H)

    Args:
        a (TwistedPartialAction): The action.
        subgroup: A list of elements of a finite group, or d >= 0 for dZ.

    Examples:
        >>> from pcross import fixtures
        >>> restrict_subgroup(fixtures.z_transfer(), 2).support
        [0]
    """
    group = a.group

    if group.is_finite:
        members = set(groups.check_subgroup(group, subgroup))
        keep = [g for g in a.support if g in members]
    elif isinstance(subgroup, int) and subgroup >= 0:
        members = subgroup
        keep = [g for g in a.support if (g % subgroup == 0 if subgroup else g == 0)]
    else:
        raise NotASubgroup("Subgroups of Z are given as d >= 0 (for dZ)")

    kept = set(keep)
    idempotents = {g: a.idem(g) for g in keep}
    maps = {g: a.alpha(g) for g in keep}
    twist = {
        (g, h): w for (g, h), w in a.explicit_twists.items() if g in kept and h in kept
    }
    restricted = TwistedPartialAction(a.algebra, group, idempotents, maps, twist)
    restricted.subgroup = members
    return restricted


def is_invariant(a, basis):
    """Finds g and x in I n D_{g^-1} with alpha_g(x) outside I, or None

    Examples:
        >>> from pcross import fixtures
        >>> is_invariant(fixtures.z_transfer(), [(1, 0)])
        {'g': '1', 'element': 'e1', 'image': 'e2'}
    """
    r, group = a.algebra, a.group
    ideal = Subspace(r.field, r.dim, basis)

    for g in a.support:
        one = a.idem(group.inv(g))

        for v in ideal.basis:
            x = r.mul_vec(v, one)
            image = a.apply(g, x)

            if image not in ideal:
                return {"g": group.label(g), "element": r.fmt(x), "image": r.fmt(image)}

    return None


def quotient_action(a, basis):
    """The induced action on R/I for an invariant ideal I

    Raises:
        NotAnIdeal: span(basis) is not an ideal
        NotInvariant: alpha_g(I n D_{g^-1}) is not contained in I

    Examples:
        >>> from pcross import fixtures
        >>> q = quotient_action(fixtures.z_transfer(), [(1, 0), (0, 1)])
        >>> q.algebra.dim, q.support
        (0, [0])
    """
    r = a.algebra
    witness = is_invariant(a, basis)

    if witness:
        msg = "Ideal is not invariant: alpha_%s(%s) = %s escapes"
        args = (witness["g"], witness["element"], witness["image"])
        raise NotInvariant(msg % args, witness=witness)

    q, projection = algebras.quotient(r, basis)
    pivots = set(Subspace(r.field, r.dim, basis).pivots)
    keep = [j for j in range(r.dim) if j not in pivots]
    section = Matrix.from_columns(r.field, [r.unit_vector(j) for j in keep], rows=r.dim)

    idempotents = {g: projection.apply(a.idem(g)) for g in a.support}
    maps = {g: projection * a.alpha(g) * section for g in a.support}
    twist = {
        (g, h): projection.apply(w) for (g, h), w in a.explicit_twists.items()
    }
    induced = TwistedPartialAction(q, a.group, idempotents, maps, twist)
    induced.projection = projection
    return induced


def fixed_ring(a):
    """A canonical basis of the partial fixed ring
    {x : alpha_g(x 1_{g^-1}) = x 1_g for all g}

    Examples:
        >>> from pcross import fixtures
        >>> len(fixed_ring(fixtures.c2_swap()))
        1
    """
    r = a.algebra
    blocks = [a.alpha(g) - r.right_matrix(a.idem(g)) for g in a.support]
    basis = algebras._nullspace(r.field, r.dim, blocks)
    escape = algebras.is_subalgebra(r, basis)

    if escape:
        logger.warning("fixed ring is not multiplicatively closed: %s", escape)

    return basis


def is_finite_type(a):
    """Decides whether a finite S has sum_{s in S} D_gs = R for every g

    Returns:
        Tuple[bool, dict]: the decision and a witness. For finite groups S = G.
        For the integers with R != 0 every finite S fails: with M the largest
        |support| element, g = 2M + 1 moves S = -support off the support.

    Examples:
        >>> from pcross import fixtures
        >>> is_finite_type(fixtures.z_on_field())
        (False, {'S': ['0'], 'g': '1', 'sum_dim': 0})
        >>> is_finite_type(fixtures.c2_swap())[0]
        True
    """
    group = a.group
    label = group.label

    if group.is_finite:
        return True, {"S": [label(g) for g in group.elements]}

    if not a.dim:
        return True, {"S": [label(group.e)]}

    bound = max(abs(g) for g in a.support)
    candidate = sorted(-s for s in a.support)
    g = 2 * bound + 1
    total = Subspace(a.field, a.dim)

    for s in candidate:
        total = total + a.ideal(g + s)

    witness = {"S": [label(s) for s in candidate], "g": label(g), "sum_dim": total.dim}
    return False, witness


def align_actions(a, b, change):
    """Compares two actions of one group through an algebra isomorphism

    Args:
        a (TwistedPartialAction): The source action on R.
        b (TwistedPartialAction): The target action on R'.
        change (Matrix): The algebra isomorphism R -> R'.

    Returns:
        Report
    """
    report = Report("alignment")
    label = a.group.label
    iso = algebras.check_algebra_map(a.algebra, b.algebra, change, bijective=True)
    report.merge(iso, prefix="isomorphism")

    if not report.passed:
        return report

    supports = [label(g) for g in a.support], [label(g) for g in b.support]
    msg = "supports differ"
    report.check(a.support == b.support, "support", msg, supports=supports)

    for g in a.support:
        report.check(
            change.apply(a.idem(g)) == b.idem(g),
            "idempotent",
            "1_%s does not correspond" % label(g),
            g=label(g),
        )
        report.check(
            change * a.alpha(g) == b.alpha(g) * change,
            "alpha",
            "alpha_%s does not correspond" % label(g),
            g=label(g),
        )

    for g, h in a.pairs():
        report.check(
            change.apply(a.twist(g, h)) == b.twist(g, h),
            "twist",
            "w_%s,%s does not correspond" % (label(g), label(h)),
            g=label(g),
            h=label(h),
        )

    return report
