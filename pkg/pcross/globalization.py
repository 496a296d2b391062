# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.globalization
~~~~~~~~~~~~~~~~~~~~

Enveloping (global) actions of untwisted partial actions of finite groups and
the checks that a global action on T envelopes a partial action on an ideal R

The enveloping algebra is built inside the algebra of functions G -> R with
pointwise products, phi(r)(h) = alpha_h(r 1_{h^-1}) and
beta_g(f)(h) = f(hg). T is the sum of the beta_g(phi(R)).

Examples:
    basic usage::

        >>> from pcross import fixtures
        >>> pair = globalize(fixtures.c3_restriction())
        >>> pair.enveloping.algebra.dim
        3
        >>> verify_enveloping(pair).passed
        True
"""

from itertools import product

from . import algebras, linalg
from .actions import GlobalAction, validate_global
from .linalg import Matrix, Subspace
from .utils import Report, TwistedInput, InfiniteGroup, MalformedInput, get_logger

logger = get_logger(__name__)


class EnvelopingPair(object):
    """A partial action, a global action on T and an embedding R -> T

    Args:
        partial (TwistedPartialAction): The action on R.
        enveloping (GlobalAction): The action on T.
        embedding (Matrix): The T.dim x R.dim matrix of phi.
    """

    def __init__(self, partial, enveloping, embedding):
        if embedding.shape != (enveloping.algebra.dim, partial.dim):
            msg = "embedding has shape %ix%i, expected %ix%i"
            args = embedding.shape + (enveloping.algebra.dim, partial.dim)
            raise MalformedInput(msg % args)

        self.partial = partial
        self.enveloping = enveloping
        self.embedding = embedding

    @property
    def idempotent(self):
        """phi(1_R)"""
        return self.embedding.apply(self.partial.algebra.unit)

    def __repr__(self):
        dims = (self.partial.dim, self.enveloping.algebra.dim)
        return "<EnvelopingPair R of dimension %i in T of dimension %i>" % dims


def function_algebra(r, n):
    """R^n with pointwise products, block h holding the value at h"""
    d = r.dim
    consts = {}

    for h in range(n):
        for (i, j), column in r.consts.items():
            consts[(h * d + i, h * d + j)] = {h * d + k: c for k, c in column.items()}

    names = ["%s@%i" % (name, h) for h in range(n) for name in r.names]
    return algebras.StructureAlgebra(r.field, n * d, consts, r.unit * n, names)


def globalize(action):
    """The enveloping action of an untwisted partial action of a finite group

    Returns:
        EnvelopingPair

    Raises:
        TwistedInput: the action has a nontrivial twist
        InfiniteGroup: the group is the integers

    Examples:
        >>> from pcross import fixtures
        >>> pair = globalize(fixtures.c2_swap())
        >>> pair.enveloping.algebra.dim, pair.embedding.shape
        (2, (2, 2))
        >>> globalize(fixtures.z_transfer())
        Traceback (most recent call last):
        pcross.utils.InfiniteGroup: Globalization is supported for finite groups only
    """
    group, r = action.group, action.algebra

    if action.is_twisted:
        raise TwistedInput("Globalization needs an untwisted action (w = 1)")

    if not group.is_finite:
        raise InfiniteGroup("Globalization is supported for finite groups only")

    n, d, field = group.order, r.dim, action.field
    functions = function_algebra(r, n)

    def phi(x):
        return sum((action.apply(h, x) for h in group.elements), ())

    def shift(g, f):
        blocks = [f[k * d : (k + 1) * d] for k in range(n)]
        return sum((blocks[group.mul(h, g)] for h in group.elements), ())

    images = [phi(r.unit_vector(i)) for i in range(d)]
    spanning = [shift(g, f) for g in group.elements for f in images]
    space = Subspace(field, n * d, spanning)
    unit = algebras.ideal_identity(functions, space.basis)

    if unit is None:
        raise MalformedInput("The orbit sum of phi(R) has no identity")

    coords = space.coordinates
    consts = {}

    for i, j in product(range(space.dim), repeat=2):
        prod = functions.mul_vec(space.basis[i], space.basis[j])
        consts[(i, j)] = dict(enumerate(coords(prod)))

    names = ["t%i" % (k + 1) for k in range(space.dim)]
    t = algebras.StructureAlgebra(field, space.dim, consts, coords(unit), names)
    maps = {}

    for g in group.elements:
        columns = [coords(shift(g, v)) for v in space.basis]
        maps[g] = Matrix.from_columns(field, columns, rows=space.dim)

    embedding = Matrix.from_columns(field, [coords(v) for v in images], rows=space.dim)
    enveloping = GlobalAction(t, group, maps)
    logger.debug("globalized %r into dimension %i", action, t.dim)
    return EnvelopingPair(action, enveloping, embedding)


def verify_enveloping(pair, window=2):
    """Checks that the global action envelopes the partial one

    The checks: the global action axioms, phi is an injective unital map onto
    the ideal T phi(1_R), phi(alpha_g(x 1_{g^-1})) = beta_g(phi(x)) phi(1_R),
    the twists restrict, T is the sum of the beta_g(phi(R)) and (for the
    integers) beta_1 is bijective.

    Args:
        pair (EnvelopingPair): The candidate.
        window (int): For the integers, check |g| <= window.

    Returns:
        Report

    Examples:
        >>> from pcross import fixtures
        >>> report = verify_enveloping(fixtures.truncated_pair(2))
        >>> report.passed
        False
        >>> report.first("bijective")["witness"]
        {'kernel': 'e2'}
    """
    report = Report("enveloping")
    a, b, phi = pair.partial, pair.enveloping, pair.embedding
    r, t, group = a.algebra, b.algebra, a.group
    label, mul = group.label, t.mul_vec
    report.merge(validate_global(b, window=window), prefix="global")

    images = phi.columns()

    for i, j in product(range(r.dim), repeat=2):
        if phi.apply(r.product(i, j)) != mul(images[i], images[j]):
            msg = "phi(%s %s) != phi(%s) phi(%s)" % ((r.names[i], r.names[j]) * 2)
            report.fail("multiplicative", msg, pair=(r.names[i], r.names[j]))
            break

    rank = linalg.rank(phi)
    msg = "phi has rank %i on R of dimension %i" % (rank, r.dim)
    report.check(rank == r.dim, "injective", msg, rank=rank)

    one = pair.idempotent
    image = Subspace(t.field, t.dim, phi.columns())
    corner = Subspace(t.field, t.dim, t.right_matrix(one).columns())

    if not algebras.is_central_idempotent(t, one):
        report.fail("ideal", "phi(1_R) is not a central idempotent of T")
    elif image != corner:
        report.fail("ideal", "phi(R) is not the ideal T phi(1_R)")

    elements = b.elements(window)

    for g in elements:
        for i in range(r.dim):
            x = r.unit_vector(i)
            left = phi.apply(a.apply(g, x))
            right = mul(b.apply(g, phi.apply(x)), one)

            if left != right:
                msg = "phi(alpha_%s(%s)) != beta_%s(phi(%s)) 1_R"
                args = (label(g), r.names[i], label(g), r.names[i])
                report.fail("restriction", msg % args, g=label(g), x=r.names[i])
                break

    for g, h in a.pairs():
        gh = group.mul(g, h)
        cut = mul(mul(one, b.apply(g, one)), b.apply(gh, one))
        restricted = mul(b.twist(g, h), cut)

        if phi.apply(a.twist(g, h)) != restricted:
            msg = "w_%s,%s is not the restriction of u" % (label(g), label(h))
            report.fail("twist", msg, g=label(g), h=label(h))
            break

    spanning = [b.apply(g, v) for g in elements for v in image.basis]
    generated = Subspace(t.field, t.dim, spanning)
    msg = "the beta_g(phi(R)) span dimension %i of %i" % (generated.dim, t.dim)
    report.check(generated.dim == t.dim, "generated", msg, span=generated.dim)

    if not group.is_finite:
        kernel = linalg.kernel_basis(b.beta(1))

        if kernel:
            msg = "beta_1 is not bijective on T"
            report.fail("bijective", msg, kernel=t.fmt(kernel[0]))

    return report


def embedded_ideal(pair):
    """phi(R) as a subspace of T"""
    t = pair.enveloping.algebra
    return Subspace(t.field, t.dim, pair.embedding.columns())

