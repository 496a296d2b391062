# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.crossed
~~~~~~~~~~~~~~

Partial crossed products R *_{alpha,w} G: element arithmetic by the twisted
multiplication rule, the explicit structure constant algebra, subgroup
decompositions, quotients, induced forms and the averaging operator

Examples:
    basic usage::

        >>> from pcross import fixtures
        >>> action = fixtures.z_transfer()
        >>> x = delta(action, 1, (0, 1))
        >>> y = delta(action, -1, (1, 0))
        >>> str(x * y)
        'e2*d[0]'
        >>> (x * x).is_zero
        True
        >>> cp = build_crossed(action)
        >>> cp.dim, cp.names
        (4, ('e1*d[-1]', 'e1*d[0]', 'e2*d[0]', 'e2*d[1]'))
"""

from itertools import product

from . import algebras, groups, linalg
from .linalg import Matrix, Subspace, is_zero, vadd, vscale
from .utils import (
    Report,
    MalformedInput,
    ParentMismatch,
    HypothesisViolation,
    InfiniteGroup,
    NotASubgroup,
    get_logger,
)

logger = get_logger(__name__)

NORMALIZATIONS = ("group-order", "idempotent-sum")


class CrossedElement(object):
    """A finitely supported sum of a_g d_g with a_g in D_g

    Args:
        action (TwistedPartialAction): The action.
        terms (dict): g -> coordinates of a_g in R.

    Examples:
        >>> from pcross import fixtures
        >>> CrossedElement(fixtures.z_transfer(), {1: (1, 0)})
        Traceback (most recent call last):
        pcross.utils.MalformedInput: e1 is not in D_1
    """

    def __init__(self, action, terms):
        self.action = action
        self.terms = {}
        r = action.algebra

        for g, coords in terms.items():
            coords = action.field.vector(coords)

            if is_zero(coords):
                continue

            if r.mul_vec(coords, action.idem(g)) != coords:
                label = action.group.label(g)
                msg = "%s is not in D_%s" % (r.fmt(coords), label)
                witness = {"g": label, "element": r.fmt(coords)}
                raise MalformedInput(msg, witness=witness)

            self.terms[g] = coords

    @property
    def support(self):
        return self.action.group.sort(self.terms)

    @property
    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if other.action is not self.action:
            raise ParentMismatch("Elements belong to different crossed products")

    def __add__(self, other):
        self._check(other)
        terms = dict(self.terms)
        zero = linalg.zero_vector(self.action.field, self.action.dim)

        for g, b in other.terms.items():
            terms[g] = vadd(terms.get(g, zero), b)

        return CrossedElement(self.action, terms)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        c = self.action.field(c)
        terms = {g: vscale(c, a) for g, a in self.terms.items()}
        return CrossedElement(self.action, terms)

    def __mul__(self, other):
        if isinstance(other, CrossedElement):
            return cross_multiply(self, other)

        return self.scale(other)

    __rmul__ = scale

    def __eq__(self, other):
        return (
            isinstance(other, CrossedElement)
            and self.action is other.action
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items())))

    def __repr__(self):
        return "<CrossedElement %s>" % self

    def __str__(self):
        r, label = self.action.algebra, self.action.group.label
        parts = []

        for g in self.support:
            text = r.fmt(self.terms[g])
            text = "(%s)" % text if " " in text else text
            parts.append("%s*d[%s]" % (text, label(g)))

        return " + ".join(parts) or "0"


def delta(action, g, coords):
    """The element a d_g"""
    return CrossedElement(action, {g: coords})


def cross_multiply(x, y):
    """(a_g d_g)(b_h d_h) = alpha_g(alpha_g^-1(a_g) b_h) w_{g,h} d_gh, extended
    bilinearly

    Raises:
        ParentMismatch: the elements come from different actions
    """
    x._check(y)
    action = x.action
    r, group = action.algebra, action.group
    mul = r.mul_vec
    zero = linalg.zero_vector(action.field, action.dim)
    terms = {}
    supported = set(action.support)

    for (g, a), (h, b) in product(x.terms.items(), y.terms.items()):
        gh = group.mul(g, h)

        if gh not in supported:
            continue

        pulled = action.alpha_inverse(g).apply(a)
        value = mul(action.apply(g, mul(pulled, b)), action.twist(g, h))
        terms[gh] = vadd(terms.get(gh, zero), value)

    return CrossedElement(action, terms)


class CrossedProduct(object):
    """R *_{alpha,w} G for a finitely supported action, with the explicit
    structure constant algebra on the basis {b d_g : b in the canonical basis
    of D_g}, ordered by group element and then by pivot

    Attributes:
        action (TwistedPartialAction): The action.
        basis (List[Tuple]): (g, b) pairs.
        as_algebra (StructureAlgebra): The crossed product as an algebra.
    """

    def __init__(self, action):
        self.action = action
        self.basis = []
        self.offsets = {}
        r, label = action.algebra, action.group.label

        for g in action.support:
            self.offsets[g] = len(self.basis)
            self.basis.extend((g, v) for v in action.ideal(g).basis)

        names = []

        for g, v in self.basis:
            text = r.fmt(v)
            text = "(%s)" % text if " " in text else text
            names.append("%s*d[%s]" % (text, label(g)))

        self.names = tuple(names)
        self.as_algebra = self._build()

    @property
    def dim(self):
        return len(self.basis)

    @property
    def field(self):
        return self.action.field

    def basis_element(self, i):
        g, v = self.basis[i]
        return CrossedElement(self.action, {g: v})

    def to_vector(self, x):
        """Coordinates of a crossed element in the crossed product basis"""
        vector = [self.field.zero] * self.dim

        for g, a in x.terms.items():
            coords = self.action.ideal(g).coordinates(a)
            offset = self.offsets[g]

            for k, c in enumerate(coords):
                vector[offset + k] = c

        return tuple(vector)

    def from_vector(self, vector):
        terms = {}
        zero = linalg.zero_vector(self.field, self.action.dim)

        for c, (g, v) in zip(vector, self.basis):
            if c != 0:
                terms[g] = vadd(terms.get(g, zero), vscale(c, v))

        return CrossedElement(self.action, terms)

    def _build(self):
        elements = [self.basis_element(i) for i in range(self.dim)]
        consts = {}

        for i, j in product(range(self.dim), repeat=2):
            prod = cross_multiply(elements[i], elements[j])

            if not prod.is_zero:
                consts[(i, j)] = dict(enumerate(self.to_vector(prod)))

        action = self.action
        unit = self.to_vector(delta(action, action.group.e, action.algebra.unit))
        return algebras.StructureAlgebra(self.field, self.dim, consts, unit, self.names)

    def __repr__(self):
        return "<CrossedProduct dim %i>" % self.dim


def build_crossed(action):
    """The crossed product of a finitely supported action

    Examples:
        >>> from pcross import fixtures
        >>> cp = build_crossed(fixtures.z_on_field())
        >>> cp.as_algebra.dim, cp.as_algebra.names
        (1, ('1*d[0]',))
    """
    cp = CrossedProduct(action)
    logger.debug("built crossed product of dimension %i", cp.dim)
    return cp


def _members(group, subgroup):
    if group.is_finite:
        return set(groups.check_subgroup(group, subgroup))
    elif isinstance(subgroup, int) and subgroup >= 0:
        return lambda g: g % subgroup == 0 if subgroup else g == 0
    else:
        raise NotASubgroup("Subgroups of Z are given as d >= 0 (for dZ)")


def _in(members, g):
    return members(g) if callable(members) else g in members


def subgroup_projection(x, subgroup):
    """Splits x into its R*H part and the complement A

    Examples:
        >>> from pcross import fixtures
        >>> action = fixtures.z_transfer()
        >>> x = delta(action, 1, (0, 1)) + delta(action, 0, (1, 0))
        >>> [str(part) for part in subgroup_projection(x, 0)]
        ['e1*d[0]', 'e2*d[1]']
    """
    members = _members(x.action.group, subgroup)
    inside = {g: a for g, a in x.terms.items() if _in(members, g)}
    outside = {g: a for g, a in x.terms.items() if not _in(members, g)}
    return CrossedElement(x.action, inside), CrossedElement(x.action, outside)


def subgroup_decomposition(cp, subgroup):
    """Checks R*G = R*H + A: R*H is a subalgebra, A is stable under two-sided
    multiplication by R*H and the projection onto R*H is an R*H-bimodule map

    Examples:
        >>> from pcross import fixtures
        >>> subgroup_decomposition(build_crossed(fixtures.c2_swap()), [0]).passed
        True
    """
    report = Report("subgroup decomposition")
    members = _members(cp.action.group, subgroup)

    inside = {i for i, (g, _) in enumerate(cp.basis) if _in(members, g)}
    outside = set(range(cp.dim)) - inside
    a = cp.as_algebra
    mul, names, zero = a.mul_vec, a.names, cp.field.zero

    def project(vector):
        return tuple(c if i in inside else zero for i, c in enumerate(vector))

    def within(vector, allowed):
        return all(c == 0 for i, c in enumerate(vector) if i not in allowed)

    for i, j in product(sorted(inside), repeat=2):
        if not within(a.product(i, j), inside):
            msg = "%s %s leaves R*H" % (names[i], names[j])
            report.fail("subalgebra", msg, pair=(names[i], names[j]))
            break

    stable = (
        (i, j)
        for i, j in product(sorted(inside), sorted(outside))
        if not (within(a.product(i, j), outside) and within(a.product(j, i), outside))
    )
    escape = next(stable, None)

    if escape:
        i, j = escape
        msg = "A is not stable under %s" % names[i]
        report.fail("complement", msg, pair=(names[i], names[j]))

    for i, j in product(sorted(inside), range(cp.dim)):
        b, x = a.unit_vector(i), a.unit_vector(j)
        left = project(mul(b, x)) == mul(b, project(x))
        right = project(mul(x, b)) == mul(project(x), b)

        if not (left and right):
            msg = "projection is not R*H-linear at %s, %s" % (names[i], names[j])
            report.fail("bimodule", msg, pair=(names[i], names[j]))
            break

    msg = "R*H has dimension %i, A has dimension %i"
    report.note(msg % (len(inside), len(outside)))
    return report


def crossed_ideal(cp, basis):
    """A canonical basis of I*G = sum of (I n D_g) d_g inside the crossed product

    Examples:
        >>> from pcross import fixtures
        >>> from pcross.algebras import upper_triangular
        >>> from pcross.groups import make_cyclic
        >>> from pcross.linalg import QQ
        >>> ut2 = upper_triangular(QQ, 2)
        >>> action = fixtures.trivial_action(ut2, make_cyclic(2))
        >>> len(crossed_ideal(build_crossed(action), [(0, 1, 0)]))
        2
    """
    action = cp.action
    r = action.algebra
    ideal = Subspace(r.field, r.dim, basis)
    vectors = []

    for g in action.support:
        for v in ideal.basis:
            x = r.mul_vec(v, action.idem(g))

            if not is_zero(x):
                vectors.append(cp.to_vector(delta(action, g, x)))

    return linalg.span_basis(cp.field, vectors, cp.dim)


def quotient_isomorphism(action, basis):
    """Checks (R*G)/(I*G) = (R/I)*G through the canonical basis map

    Raises:
        NotAnIdeal, NotInvariant: as :func:`pcross.actions.quotient_action`

    Examples:
        >>> from pcross import fixtures
        >>> from pcross.algebras import upper_triangular
        >>> from pcross.groups import make_cyclic
        >>> from pcross.linalg import QQ
        >>> ut2 = upper_triangular(QQ, 2)
        >>> action = fixtures.trivial_action(ut2, make_cyclic(2))
        >>> quotient_isomorphism(action, [(0, 1, 0)]).passed
        True
    """
    from .actions import quotient_action

    report = Report("quotient isomorphism")
    induced = quotient_action(action, basis)
    cp = build_crossed(action)
    big, projection = algebras.quotient(cp.as_algebra, crossed_ideal(cp, basis))
    small = build_crossed(induced)
    r = action.algebra
    msg = "dimensions %i and %i differ" % (big.dim, small.dim)

    if not report.check(big.dim == small.dim, "dimension", msg):
        return report

    pivots = set(Subspace(r.field, r.dim, basis).pivots)
    keep = [j for j in range(r.dim) if j not in pivots]
    columns = []

    for g, v in small.basis:
        lift = [r.field.zero] * r.dim

        for c, j in zip(v, keep):
            lift[j] = c

        lifted = r.mul_vec(tuple(lift), action.idem(g))
        columns.append(projection.apply(cp.to_vector(delta(action, g, lifted))))

    iso = Matrix.from_columns(cp.field, columns, rows=big.dim)
    check = algebras.check_algebra_map(small.as_algebra, big, iso, bijective=True)
    report.merge(check, prefix="map")
    report.note("quotient dimension %i" % big.dim)
    return report


def induced_form(cp, form):
    """The form x -> form(pi_e(x)) on the crossed product"""
    e = cp.action.group.e
    coords = [form(v) if g == e else cp.field.zero for g, v in cp.basis]
    return algebras.LinearForm(coords, method="induced")


class Representation(object):
    """A left module K^m over an algebra, one matrix per basis element

    Args:
        algebra (StructureAlgebra): The acting algebra.
        matrices (Sequence[Matrix]): The action of each basis element.
    """

    def __init__(self, algebra, matrices):
        self.algebra = algebra
        self.matrices = list(matrices)
        self.dim = self.matrices[0].rows if self.matrices else 0

    def matrix(self, vector):
        """The action of an element given by coordinates"""
        result = Matrix.zeros(self.algebra.field, self.dim, self.dim)

        for c, m in zip(vector, self.matrices):
            if c != 0:
                result = result + m.scale(c)

        return result


def regular_representation(algebra):
    """The left regular module"""
    matrices = [algebra.left_matrix(algebra.unit_vector(i)) for i in range(algebra.dim)]
    return Representation(algebra, matrices)


def validate_representation(rep):
    """Checks that the unit acts as the identity and products act as products

    Examples:
        >>> from pcross.algebras import dual_numbers
        >>> from pcross.linalg import QQ
        >>> validate_representation(regular_representation(dual_numbers(QQ))).passed
        True
    """
    report = Report("representation")
    a = rep.algebra
    identity = Matrix.identity(a.field, rep.dim)
    report.check(rep.matrix(a.unit) == identity, "unit", "1 does not act as identity")

    for i, j in product(range(a.dim), repeat=2):
        left = rep.matrices[i] * rep.matrices[j]

        if left != rep.matrix(a.product(i, j)):
            msg = "rho(%s) rho(%s) != rho(%s %s)" % ((a.names[i], a.names[j]) * 2)
            report.fail("multiplicative", msg, pair=(a.names[i], a.names[j]))
            break

    return report


def maschke_average(action, rep, pi, normalization="group-order", cp=None):
    """The averaging operator

        Psi = c sum_g rho(w_{g^-1,g}^-1 d_{g^-1}) pi rho(1_g d_g)

    With `group-order` (the default) c is 1/|G|. The opt-in `idempotent-sum`
    uses the action of z^-1 d_e instead, where z = sum_g 1_g is central, fixed
    by the action and equal to |G| 1 for global actions.

    Args:
        action (TwistedPartialAction): An action of a finite group.
        rep (Representation): A module over build_crossed(action).as_algebra.
        pi (Matrix): An R-linear idempotent onto a submodule N.
        normalization (str): `group-order` or `idempotent-sum`.
        cp (CrossedProduct): The crossed product (built when omitted).

    Returns:
        Matrix

    Raises:
        HypothesisViolation: |G| is zero in K (`group-order`) or z is not
            invertible (`idempotent-sum`)

    Examples:
        >>> from pcross import fixtures
        >>> from pcross.linalg import Matrix, QQ
        >>> action = fixtures.c2_swap()
        >>> cp = build_crossed(action)
        >>> rep = regular_representation(cp.as_algebra)
        >>> identity = Matrix.identity(QQ, 4)
        >>> maschke_average(action, rep, identity, cp=cp) == identity
        True
    """
    group, r = action.group, action.algebra

    if not group.is_finite:
        raise InfiniteGroup("Averaging needs a finite group")

    if normalization not in NORMALIZATIONS:
        msg = "Unknown normalization %s. Use one of %s"
        raise MalformedInput(msg % (normalization, ", ".join(NORMALIZATIONS)))

    field = action.field
    order = field(group.order)

    if normalization == "group-order" and order == 0:
        msg = "|G| = %i is zero in %s" % (group.order, field)
        raise HypothesisViolation(msg, witness={"order": group.order})

    cp = cp or build_crossed(action)
    total = Matrix.zeros(field, rep.dim, rep.dim)

    for g in action.support:
        g_inv = group.inv(g)
        w = action.twist(g_inv, g)
        w_inv = algebras.corner_inverse(r, w, action.idem(g_inv))

        if w_inv is None:
            msg = "w_%s,%s is not invertible" % (group.label(g_inv), group.label(g))
            raise HypothesisViolation(msg, witness={"g": group.label(g)})

        back = rep.matrix(cp.to_vector(delta(action, g_inv, w_inv)))
        forth = rep.matrix(cp.to_vector(delta(action, g, action.idem(g))))
        total = total + back * pi * forth

    if normalization == "group-order":
        return total.scale(field.one / order)

    z = linalg.zero_vector(field, r.dim)

    for g in action.support:
        z = vadd(z, action.idem(g))

    z_inv = algebras.corner_inverse(r, z, r.unit)

    if z_inv is None:
        msg = "sum of the idempotents %s is not invertible" % r.fmt(z)
        raise HypothesisViolation(msg, witness={"z": r.fmt(z)})

    return rep.matrix(cp.to_vector(delta(action, group.e, z_inv))) * total


def maschke_check(cp, rep, submodule, psi):
    """Checks Psi restricted to N is the identity, Psi^2 = Psi with image N
    and that Psi commutes with every basis element of the crossed product

    Args:
        cp (CrossedProduct): The crossed product.
        rep (Representation): The module.
        submodule (Sequence): A basis of N.
        psi (Matrix): The averaged map.

    Returns:
        Report
    """
    report = Report("maschke")
    field = cp.field
    n = Subspace(field, rep.dim, submodule)

    for v in n.basis:
        if psi.apply(v) != v:
            report.fail("restriction", "Psi does not fix N", vector=v)
            break

    report.check(psi * psi == psi, "idempotent", "Psi^2 != Psi")
    images = [c for c in psi.columns() if c not in n]
    witness = images[0] if images else None
    report.check(not images, "image", "Psi leaves N", vector=witness)

    for i, m in enumerate(rep.matrices):
        if m * psi != psi * m:
            name = cp.names[i]
            msg = "Psi does not commute with %s" % name
            report.fail("equivariance", msg, basis=name)
            break

    return report

