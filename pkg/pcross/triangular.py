# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.triangular
~~~~~~~~~~~~~~~~~

Triangular matrix algebras L = (R, N, S), relative partial actions on
bimodules and the decomposition L*G = (R*G, M, S*G)

Examples:
    basic usage::

        >>> from pcross import fixtures
        >>> L, action = fixtures.sign_on_bimodule()
        >>> L.algebra.names
        ('(1,0,0)', '(0,n1,0)', '(0,0,1)')
        >>> rel = extract_component_actions(L, action)
        >>> print(rel.maps[1])
        [[-1]]
        >>> triangular_crossed_iso(L, action).passed
        True
"""

from itertools import product

from . import algebras, linalg
from .actions import TwistedPartialAction, validate_action
from .crossed import build_crossed, delta
from .linalg import Matrix, Subspace, is_zero
from .utils import (
    Report,
    MalformedInput,
    HypothesisViolation,
    InfiniteGroup,
    TwistedInput,
    get_logger,
)

logger = get_logger(__name__)


class Bimodule(object):
    """An (R, S)-bimodule K^m given by matrices

    Args:
        left (StructureAlgebra): R.
        right (StructureAlgebra): S.
        dim (int): m.
        left_matrices (Sequence[Matrix]): n -> b_i n for each basis element of R.
        right_matrices (Sequence[Matrix]): n -> n c_j for each basis element of S.
        names (Sequence[str]): Basis names (default: `n1`, `n2`, ...).
    """

    def __init__(self, left, right, dim, left_matrices, right_matrices, names=None):
        self.left = left
        self.right = right
        self.dim = dim
        self.left_matrices = list(left_matrices)
        self.right_matrices = list(right_matrices)
        self.names = tuple(names or ("n%i" % (k + 1) for k in range(dim)))

        if len(self.left_matrices) != left.dim or len(self.right_matrices) != right.dim:
            raise MalformedInput("Need one action matrix per basis element")

        if any(m.shape != (dim, dim) for m in self.left_matrices + self.right_matrices):
            raise MalformedInput("Action matrices must be %ix%i" % (dim, dim))

    @property
    def field(self):
        return self.left.field

    def _combine(self, matrices, vector):
        result = Matrix.zeros(self.field, self.dim, self.dim)

        for c, m in zip(vector, matrices):
            if c != 0:
                result = result + m.scale(c)

        return result

    def left_matrix(self, r):
        return self._combine(self.left_matrices, r)

    def right_matrix(self, s):
        return self._combine(self.right_matrices, s)

    def act(self, r, n, s=None):
        """r n (s)"""
        n = self.left_matrix(r).apply(n)
        return n if s is None else self.right_matrix(s).apply(n)

    def __repr__(self):
        return "<Bimodule of dimension %i>" % self.dim


def regular_bimodule(r):
    """R as an (R, R)-bimodule"""
    vectors = [r.unit_vector(i) for i in range(r.dim)]
    left = [r.left_matrix(v) for v in vectors]
    right = [r.right_matrix(v) for v in vectors]
    return Bimodule(r, r, r.dim, left, right)


def zero_bimodule(r, s):
    empty = Matrix.zeros(r.field, 0, 0)
    return Bimodule(r, s, 0, [empty] * r.dim, [empty] * s.dim)


def validate_bimodule(bimodule):
    """Checks unitality, both actions and that they commute

    Examples:
        >>> from pcross.algebras import dual_numbers
        >>> from pcross.linalg import QQ
        >>> validate_bimodule(regular_bimodule(dual_numbers(QQ))).passed
        True
    """
    report = Report("bimodule")
    r, s, field = bimodule.left, bimodule.right, bimodule.field
    identity = Matrix.identity(field, bimodule.dim)
    report.check(bimodule.left_matrix(r.unit) == identity, "unit", "1_R n != n")
    report.check(bimodule.right_matrix(s.unit) == identity, "unit", "n 1_S != n")
    left, right = bimodule.left_matrices, bimodule.right_matrices

    for i, j in product(range(r.dim), repeat=2):
        if left[i] * left[j] != bimodule.left_matrix(r.product(i, j)):
            msg = "(%s %s) n != %s (%s n)" % ((r.names[i], r.names[j]) * 2)
            report.fail("left", msg, pair=(r.names[i], r.names[j]))
            break

    for i, j in product(range(s.dim), repeat=2):
        if right[j] * right[i] != bimodule.right_matrix(s.product(i, j)):
            msg = "n (%s %s) != (n %s) %s" % ((s.names[i], s.names[j]) * 2)
            report.fail("right", msg, pair=(s.names[i], s.names[j]))
            break

    for i, j in product(range(r.dim), range(s.dim)):
        if left[i] * right[j] != right[j] * left[i]:
            msg = "(%s n) %s != %s (n %s)" % ((r.names[i], s.names[j]) * 2)
            report.fail("commute", msg, pair=(r.names[i], s.names[j]))
            break

    return report


class TriangularAlgebra(object):
    """The algebra of triples (r, n, s) with
    (r, n, s)(r', n', s') = (r r', r n' + n s', s s')

    Attributes:
        algebra (StructureAlgebra): Basis R, then N, then S.
        left, bimodule, right: The three blocks.
    """

    def __init__(self, algebra, bimodule):
        self.algebra = algebra
        self.bimodule = bimodule
        self.left = bimodule.left
        self.right = bimodule.right
        p, m = self.left.dim, bimodule.dim
        self.blocks = (slice(0, p), slice(p, p + m), slice(p + m, algebra.dim))

    @property
    def field(self):
        return self.algebra.field

    def split(self, vector):
        """(r, n, s) coordinates of an element"""
        return tuple(tuple(vector[block]) for block in self.blocks)

    def join(self, r=None, n=None, s=None):
        zero = self.field.zero
        dims = (self.left.dim, self.bimodule.dim, self.right.dim)
        parts = [
            tuple(p) if p is not None else (zero,) * d for p, d in zip((r, n, s), dims)
        ]
        return sum(parts, ())

    @property
    def left_corner(self):
        return self.join(r=self.left.unit)

    @property
    def right_corner(self):
        return self.join(s=self.right.unit)

    def __repr__(self):
        dims = (self.left.dim, self.bimodule.dim, self.right.dim)
        return "<TriangularAlgebra (%i, %i, %i)>" % dims


def assemble_triangular(r, bimodule, s):
    """The triangular algebra (R, N, S)

    Raises:
        MalformedInput: N is not an (R, S)-bimodule

    Examples:
        >>> from pcross.algebras import field_algebra, upper_triangular
        >>> from pcross.linalg import QQ
        >>> k = field_algebra(QQ)
        >>> L = assemble_triangular(k, regular_bimodule(k), k)
        >>> L.algebra.table() == upper_triangular(QQ, 2).table()
        True
        >>> assemble_triangular(k, zero_bimodule(k, k), k).algebra.dim
        2
    """
    report = validate_bimodule(bimodule)

    if bimodule.left != r or bimodule.right != s:
        report.fail("algebras", "bimodule is not over (R, S)")

    if not report.passed:
        first = report.failures[0]
        raise MalformedInput(first["message"], witness=first["witness"])

    p, m, q = r.dim, bimodule.dim, s.dim
    consts = {}

    for (i, j), column in r.consts.items():
        consts[(i, j)] = dict(column)

    for (i, j), column in s.consts.items():
        consts[(p + m + i, p + m + j)] = {p + m + k: c for k, c in column.items()}

    for i, k in product(range(p), range(m)):
        image = bimodule.left_matrices[i].column(k)
        consts[(i, p + k)] = {p + x: c for x, c in enumerate(image)}

    for k, j in product(range(m), range(q)):
        image = bimodule.right_matrices[j].column(k)
        consts[(p + k, p + m + j)] = {p + x: c for x, c in enumerate(image)}

    names = ["(%s,0,0)" % name for name in r.names]
    names += ["(0,%s,0)" % name for name in bimodule.names]
    names += ["(0,0,%s)" % name for name in s.names]
    unit = r.unit + (r.field.zero,) * m + s.unit
    algebra = algebras.StructureAlgebra(r.field, p + m + q, consts, unit, names)
    return TriangularAlgebra(algebra, bimodule)


class IdealComponents(object):
    """J = (J1, N2, J3) for an ideal J of a triangular algebra

    Attributes:
        left (tuple): A basis of J1 in R.
        middle (tuple): A basis of N2 in N.
        right (tuple): A basis of J3 in S.
        generators (tuple): Idempotents (e1, e3) generating J1 and J3 when J is
            generated by a central idempotent, else None.
    """

    def __init__(self, left, middle, right, generators=None):
        self.left = left
        self.middle = middle
        self.right = right
        self.generators = generators

    @property
    def dims(self):
        return (len(self.left), len(self.middle), len(self.right))

    def __repr__(self):
        return "<IdealComponents %s>" % (self.dims,)


def decompose_ideal(L, basis):
    """Splits an ideal J into its corner components

    Raises:
        NotAnIdeal: span(basis) is not a two-sided ideal

    Examples:
        >>> from pcross import fixtures
        >>> L, _ = fixtures.sign_on_bimodule()
        >>> decompose_ideal(L, algebras.jacobson_radical(L.algebra)).dims
        (0, 1, 0)
        >>> decompose_ideal(L, []).dims
        (0, 0, 0)
    """
    a = L.algebra
    ideal = algebras.check_ideal(a, basis)
    mul = a.mul_vec
    e_r, e_s = L.left_corner, L.right_corner
    lefts, middles, rights = [], [], []

    for v in ideal.basis:
        lefts.append(L.split(mul(mul(e_r, v), e_r))[0])
        middles.append(L.split(mul(mul(e_r, v), e_s))[1])
        rights.append(L.split(mul(mul(e_s, v), e_s))[2])

    left = linalg.span_basis(a.field, lefts, L.left.dim)
    middle = linalg.span_basis(a.field, middles, L.bimodule.dim)
    right = linalg.span_basis(a.field, rights, L.right.dim)
    generators = None
    identity = algebras.ideal_identity(a, ideal.basis) if ideal.dim else None

    if identity is not None and algebras.is_central_idempotent(a, identity):
        r_part, _, s_part = L.split(identity)
        generators = (r_part, s_part)

    return IdealComponents(left, middle, right, generators)


def reassemble(L, components):
    """The span of (J1, 0, 0) + (0, N2, 0) + (0, 0, J3)"""
    vectors = [L.join(r=v) for v in components.left]
    vectors += [L.join(n=v) for v in components.middle]
    vectors += [L.join(s=v) for v in components.right]
    return Subspace(L.field, L.algebra.dim, vectors)


class RelativePartialAction(object):
    """Partial actions on R and S together with compatible partial maps of N

    Args:
        left (TwistedPartialAction): alpha1 on R.
        right (TwistedPartialAction): alpha3 on S.
        bimodule (Bimodule): N.
        submodules (dict): g -> Subspace N_g.
        maps (dict): g -> Matrix of alpha2_g on N (zero off N_{g^-1}).
    """

    def __init__(self, left, right, bimodule, submodules, maps):
        if left.group != right.group:
            raise MalformedInput("The component actions must share a group")

        self.left = left
        self.right = right
        self.bimodule = bimodule
        self.submodules = dict(submodules)
        self.maps = dict(maps)

    @property
    def group(self):
        return self.left.group

    @property
    def support(self):
        keys = set(self.left.support) | set(self.right.support) | set(self.submodules)
        return self.group.sort(keys)

    def submodule(self, g):
        zero = Subspace(self.bimodule.field, self.bimodule.dim)
        return self.submodules.get(g, zero)

    def alpha(self, g):
        n = self.bimodule.dim
        return self.maps.get(g, Matrix.zeros(self.bimodule.field, n, n))

    def __repr__(self):
        labels = [self.group.label(g) for g in self.support]
        return "<RelativePartialAction support %s>" % labels


def validate_relative(rel):
    """Checks the component actions, N_e = N, alpha_e = id, the bijections
    N_{g^-1} -> N_g, compatibility with both module actions, the intersection
    rule and the composition rule

    Examples:
        >>> from pcross import fixtures
        >>> L, action = fixtures.sign_on_bimodule()
        >>> validate_relative(extract_component_actions(L, action)).passed
        True
    """
    report = Report("relative action")
    group, bimodule = rel.group, rel.bimodule
    label, inv, gmul = group.label, group.inv, group.mul
    left, right = rel.left, rel.right
    report.merge(validate_action(left), prefix="left")
    report.merge(validate_action(right), prefix="right")

    if left.is_twisted or right.is_twisted:
        report.fail("twist", "relative actions are untwisted")

    n, field = bimodule.dim, bimodule.field
    e = group.e
    report.check(rel.submodule(e).dim == n, "identity", "N_e != N")
    msg = "alpha2_e is not the identity"
    report.check(rel.alpha(e) == Matrix.identity(field, n), "identity", msg)

    for g in rel.support:
        g_inv = inv(g)
        source, target = rel.submodule(g_inv), rel.submodule(g)
        alpha = rel.alpha(g)
        image = Subspace(field, n, [alpha.apply(v) for v in source.basis])

        if image != target or image.dim != source.dim:
            msg = "alpha2_%s is not a bijection N_%s -> N_%s"
            args = (label(g), label(g_inv), label(g))
            report.fail("bijective", msg % args, g=label(g))
            continue

        r_basis = left.ideal(g_inv).basis
        s_basis = right.ideal(g_inv).basis

        for x, v in product(r_basis, source.basis):
            lhs = alpha.apply(bimodule.act(x, v))
            rhs = bimodule.act(left.apply(g, x), alpha.apply(v))

            if lhs != rhs:
                msg = "alpha2_%s(r n) != alpha1_%s(r) alpha2_%s(n)" % ((label(g),) * 3)
                report.fail("left compatible", msg, g=label(g))
                break

        for v, y in product(source.basis, s_basis):
            lhs = alpha.apply(bimodule.right_matrix(y).apply(v))
            rhs = bimodule.right_matrix(right.apply(g, y)).apply(alpha.apply(v))

            if lhs != rhs:
                msg = "alpha2_%s(n s) != alpha2_%s(n) alpha3_%s(s)" % ((label(g),) * 3)
                report.fail("right compatible", msg, g=label(g))
                break

    if not report.passed:
        return report

    for g, h in product(rel.support, repeat=2):
        g_inv, gh = inv(g), gmul(g, h)
        domain = rel.submodule(g_inv).intersect(rel.submodule(h))
        image = Subspace(field, n, [rel.alpha(g).apply(v) for v in domain.basis])

        if image != rel.submodule(g).intersect(rel.submodule(gh)):
            msg = "alpha2_%s(N_%s n N_%s) != N_%s n N_%s"
            args = (label(g), label(g_inv), label(h), label(g), label(gh))
            report.fail("intersection", msg % args, g=label(g), h=label(h))
            return report

    for g, h in product(rel.support, repeat=2):
        gh = gmul(g, h)
        domain = rel.submodule(inv(h)).intersect(rel.submodule(inv(gh)))

        for v in domain.basis:
            if rel.alpha(g).apply(rel.alpha(h).apply(v)) != rel.alpha(gh).apply(v):
                names = (label(g), label(h), label(gh))
                msg = "alpha2_%s alpha2_%s != alpha2_%s" % names
                report.fail("composition", msg, g=label(g), h=label(h))
                return report

    return report


def extract_component_actions(L, action):
    """Reads alpha1, alpha2, alpha3 off a partial action on L that preserves
    the corners: alpha_g(1^R_{g^-1}, 0, 0) = (1^R_g, 0, 0) and likewise for S

    Raises:
        TwistedInput: the action is twisted
        HypothesisViolation: some alpha_g moves a corner (witness g)

    Examples:
        >>> from pcross import fixtures
        >>> L, swap = fixtures.corner_swap()
        >>> extract_component_actions(L, swap)
        Traceback (most recent call last):
        pcross.utils.HypothesisViolation: alpha_g does not preserve the corners
    """
    if action.is_twisted:
        raise TwistedInput("Component actions are extracted from untwisted actions")

    group, label = action.group, action.group.label
    r_idems, s_idems, r_maps, s_maps, submodules, n_maps = {}, {}, {}, {}, {}, {}
    p, m, q = L.left.dim, L.bimodule.dim, L.right.dim

    for g in action.support:
        g_inv = group.inv(g)
        r_g, _, s_g = L.split(action.idem(g))
        r_inv, _, s_inv = L.split(action.idem(g_inv))
        r_image = action.apply(g, L.join(r=r_inv))
        s_image = action.apply(g, L.join(s=s_inv))

        if r_image != L.join(r=r_g) or s_image != L.join(s=s_g):
            msg = "alpha_%s does not preserve the corners" % label(g)
            raise HypothesisViolation(msg, witness={"g": label(g)})

        def block(part, dim, make):
            columns = [L.split(action.apply(g, make(v)))[part] for v in _units(dim)]
            return Matrix.from_columns(L.field, columns, rows=dim)

        r_idems[g], s_idems[g] = r_g, s_g
        r_maps[g] = block(0, p, lambda v: L.join(r=v))
        n_maps[g] = block(1, m, lambda v: L.join(n=v))
        s_maps[g] = block(2, q, lambda v: L.join(s=v))
        middles = [L.split(v)[1] for v in action.ideal(g).basis]
        submodules[g] = Subspace(L.field, m, middles)

    def component(algebra, idems, maps):
        kept = {g: v for g, v in idems.items() if not is_zero(v)}
        return TwistedPartialAction(
            algebra, group, kept, {g: maps[g] for g in kept}
        )

    left = component(L.left, r_idems, r_maps)
    right = component(L.right, s_idems, s_maps)
    kept = {g: s for g, s in submodules.items() if s.dim}
    maps = {g: n_maps[g] for g in kept}
    return RelativePartialAction(left, right, L.bimodule, kept, maps)


def _units(dim):
    return [tuple(1 if i == j else 0 for i in range(dim)) for j in range(dim)]


def _pull_back(matrix, source, vector):
    """The x in `source` with matrix x = vector"""
    basis = Matrix.from_columns(matrix.field, source.basis, rows=source.n)
    coords = linalg.solve(matrix * basis, vector) if source.dim else None

    if coords is None:
        raise MalformedInput("No preimage in the source submodule")

    return basis.apply(coords)


def crossed_bimodule(rel, left_cp, right_cp):
    """M = sum of N_g d_g as an (R*G, S*G)-bimodule, with
    (a d_g)(n d_h) = alpha2_g(alpha1_g^-1(a) n) w d_gh and
    (n d_g)(s d_h) = alpha2_g(alpha2_g^-1(n) s) w d_gh

    Returns:
        Tuple[Bimodule, list]: the bimodule and its (g, n) basis
    """
    group, bimodule = rel.group, rel.bimodule
    field = bimodule.field
    basis = [(g, v) for g in rel.support for v in rel.submodule(g).basis]
    offsets, count = {}, 0

    for g in rel.support:
        offsets[g] = count
        count += rel.submodule(g).dim

    def to_vector(g, v):
        vector = [field.zero] * len(basis)

        if g in offsets and not is_zero(v):
            for k, c in enumerate(rel.submodule(g).coordinates(v)):
                vector[offsets[g] + k] = c

        return tuple(vector)

    def twist_part(g, h):
        gh = group.mul(g, h)
        return rel.right.algebra.mul_vec(rel.right.idem(g), rel.right.idem(gh))

    lefts = []

    for g, a in left_cp.basis:
        pulled = rel.left.alpha_inverse(g).apply(a)
        columns = []

        for h, v in basis:
            moved = rel.alpha(g).apply(bimodule.act(pulled, v))
            value = bimodule.right_matrix(twist_part(g, h)).apply(moved)
            columns.append(to_vector(group.mul(g, h), value))

        lefts.append(Matrix.from_columns(field, columns, rows=len(basis)))

    rights = []

    for h, s in right_cp.basis:
        columns = []

        for g, v in basis:
            pulled = _pull_back(rel.alpha(g), rel.submodule(group.inv(g)), v)
            moved = rel.alpha(g).apply(bimodule.right_matrix(s).apply(pulled))
            value = bimodule.right_matrix(twist_part(g, h)).apply(moved)
            columns.append(to_vector(group.mul(g, h), value))

        rights.append(Matrix.from_columns(field, columns, rows=len(basis)))

    label = group.label
    names = ["%s*d[%s]" % (_fmt_module(bimodule, v), label(g)) for g, v in basis]
    crossed = Bimodule(
        left_cp.as_algebra, right_cp.as_algebra, len(basis), lefts, rights, names
    )
    return crossed, basis


def _fmt_module(bimodule, vector):
    terms = [
        "%s*%s" % (c, name) if c != 1 else name
        for c, name in zip(vector, bimodule.names)
        if c != 0
    ]
    text = " + ".join(terms) or "0"
    return "(%s)" % text if len(terms) > 1 else text


def triangular_crossed_iso(L, action):
    """Checks L*G = (R*G, M, S*G) through
    sum (r_g, n_g, s_g) d_g -> (sum r_g d_g, sum n_g d_g, sum s_g d_g)

    Raises:
        HypothesisViolation: as :func:`extract_component_actions`

    Returns:
        Report
    """
    report = Report("triangular isomorphism")
    rel = extract_component_actions(L, action)
    whole = build_crossed(action)
    left_cp, right_cp = build_crossed(rel.left), build_crossed(rel.right)
    crossed, m_basis = crossed_bimodule(rel, left_cp, right_cp)
    bimodule_report = validate_bimodule(crossed)
    report.merge(bimodule_report, prefix="M")

    if not bimodule_report.passed:
        return report

    target = assemble_triangular(left_cp.as_algebra, crossed, right_cp.as_algebra)
    m_index = {}

    for k, (g, v) in enumerate(m_basis):
        m_index.setdefault(g, []).append(k)

    columns = []

    for g, v in whole.basis:
        r_part, n_part, s_part = L.split(v)
        r_coords = _coords(left_cp, rel.left, g, r_part)
        s_coords = _coords(right_cp, rel.right, g, s_part)
        n_coords = [L.field.zero] * len(m_basis)

        if not is_zero(n_part):
            for k, c in zip(m_index[g], rel.submodule(g).coordinates(n_part)):
                n_coords[k] = c

        columns.append(target.join(r_coords, n_coords, s_coords))

    iso = Matrix.from_columns(L.field, columns, rows=target.algebra.dim)
    check = algebras.check_algebra_map(
        whole.as_algebra, target.algebra, iso, bijective=True, name="component map"
    )
    report.merge(check, prefix="map")
    dims = (whole.dim, left_cp.dim, len(m_basis), right_cp.dim)
    report.note("L*G has dimension %i = %i + %i + %i" % dims)
    return report


def _coords(cp, action, g, part):
    zero = (cp.field.zero,) * cp.dim

    if is_zero(part):
        return zero

    return cp.to_vector(delta(action, g, part))


def diagonal_extension(action):
    """Extends an action on R to L = (R, R, R) with 1_g -> (1_g, 0, 1_g) and
    alpha_g acting on every block

    Examples:
        >>> from pcross import fixtures
        >>> L, extended = diagonal_extension(fixtures.c3_restriction())
        >>> L.algebra.dim, validate_action(extended).passed
        (6, True)
    """
    r = action.algebra
    L = assemble_triangular(r, regular_bimodule(r), r)
    zero = Matrix.zeros(r.field, r.dim, r.dim)
    idempotents, maps, twist = {}, {}, {}

    for g in action.support:
        one = action.idem(g)
        idempotents[g] = L.join(one, None, one)
        alpha = action.alpha(g)
        top = alpha.hstack(zero).hstack(zero)
        middle = zero.hstack(alpha).hstack(zero)
        bottom = zero.hstack(zero).hstack(alpha)
        maps[g] = top.vstack(middle).vstack(bottom)

    for (g, h), w in action.explicit_twists.items():
        twist[(g, h)] = L.join(w, None, w)

    return L, TwistedPartialAction(L.algebra, action.group, idempotents, maps, twist)


def corner_preserving(L, other, theta):
    """Checks that an isomorphism L -> L' maps each corner block into the
    matching block

    Args:
        L (TriangularAlgebra): The source.
        other (TriangularAlgebra): The target.
        theta (Matrix): The algebra map.

    Returns:
        Report
    """
    report = Report("corner preserving")
    report.merge(
        algebras.check_algebra_map(L.algebra, other.algebra, theta, bijective=True),
        prefix="map",
    )
    names = ("left", "middle", "right")

    for part, name in enumerate(names):
        source = L.blocks[part]
        target = other.blocks[part]

        for k in range(source.start, source.stop):
            image = theta.column(k)
            inside = range(target.start, target.stop)

            if any(c != 0 for i, c in enumerate(image) if i not in inside):
                msg = "theta(%s) leaves the %s block" % (L.algebra.names[k], name)
                report.fail(name, msg, basis=L.algebra.names[k])
                break

    return report


def globalize_relative(rel):
    """Checks the bimodule globalization phi(n)(h) = alpha2_h(1^R_{h^-1} n)
    inside N^G with beta_g(f)(h) = f(hg)

    The construction needs 1^R_g n = n 1^S_g = n for n in N_g; the report
    records a `units` failure when that precondition does not hold.

    Returns:
        Report

    Examples:
        >>> from pcross import fixtures
        >>> L, action = fixtures.sign_on_bimodule()
        >>> globalize_relative(extract_component_actions(L, action)).passed
        True
    """
    report = Report("relative globalization")
    group, bimodule = rel.group, rel.bimodule
    label = group.label

    if not group.is_finite:
        raise InfiniteGroup("Bimodule globalization is supported for finite groups")

    n, field, count = bimodule.dim, bimodule.field, group.order

    for g in rel.support:
        for v in rel.submodule(g).basis:
            if bimodule.act(rel.left.idem(g), v) != v or (
                bimodule.right_matrix(rel.right.idem(g)).apply(v) != v
            ):
                msg = "1_%s does not act as the identity on N_%s" % (label(g), label(g))
                report.fail("units", msg, g=label(g))
                break

    if not report.passed:
        return report

    def phi(v):
        pieces = []

        for h in group.elements:
            cut = bimodule.act(rel.left.idem(group.inv(h)), v)
            pieces.append(rel.alpha(h).apply(cut))

        return sum(pieces, ())

    def shift(g, f):
        blocks = [f[k * n : (k + 1) * n] for k in range(count)]
        return sum((blocks[group.mul(h, g)] for h in group.elements), ())

    units = _units(n)
    images = [phi(v) for v in units]
    phi_n = Subspace(field, n * count, images)
    msg = "phi is not injective"
    report.check(phi_n.dim == n, "injective", msg, rank=phi_n.dim)

    for g in rel.support:
        for v in rel.submodule(group.inv(g)).basis:
            if shift(g, phi(v)) != phi(rel.alpha(g).apply(v)):
                msg = "beta_%s(phi(n)) != phi(alpha2_%s(n))" % (label(g), label(g))
                report.fail("equivariance", msg, g=label(g))
                break

    for g in group.elements:
        moved = Subspace(field, n * count, [shift(g, f) for f in images])
        local = Subspace(field, n * count, [phi(v) for v in rel.submodule(g).basis])

        if moved.intersect(phi_n) != local:
            msg = "beta_%s(phi(N)) n phi(N) != phi(N_%s)" % (label(g), label(g))
            report.fail("intersection", msg, g=label(g))
            break

    spanning = [shift(g, f) for g in group.elements for f in images]
    total = Subspace(field, n * count, spanning)
    report.note("the global module has dimension %i" % total.dim)
    return report
