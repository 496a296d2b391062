# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.algebras
~~~~~~~~~~~~~~~

Finite-dimensional unital associative algebras given by structure constants,
together with their ideals, center, Jacobson radical, quotients and
Frobenius / symmetric form search

Examples:
    basic usage::

        >>> from pcross.linalg import QQ
        >>> a = dual_numbers(QQ)
        >>> x = a.basis_element(1)
        >>> (x * x).is_zero
        True
        >>> jacobson_radical(a)
        ((Fraction(0, 1), Fraction(1, 1)),)
        >>> frobenius_form(a).coords
        (Fraction(0, 1), Fraction(1, 1))

    matrix algebras::

        >>> m2 = matrix_algebra(QQ, 2)
        >>> len(center(m2)), is_semisimple(m2)
        (1, True)
        >>> [str(c) for c in symmetric_form(m2).coords]
        ['1', '0', '0', '1']
"""

import random

from fractions import Fraction
from itertools import product

import sympy

from . import linalg
from .linalg import Matrix, Subspace, dot, is_zero, vadd, vsub, vscale
from .utils import (
    Report,
    MalformedInput,
    DimensionMismatch,
    UnsupportedField,
    ParentMismatch,
    NotAnIdeal,
    get_logger,
)

logger = get_logger(__name__)

MAX_WITNESSES = 5
SYMBOLIC_LIMIT = 6
GRID_LIMIT = 4096
SAMPLES = 24


class StructureAlgebra(object):
    """A unital associative algebra on the basis b_0..b_{n-1}

    Args:
        field (FieldSpec): The base field.

        dim (int): The dimension n.

        consts (dict): Sparse structure constants `{(i, j): {k: c}}` meaning
            b_i b_j = sum(c b_k). Missing pairs multiply to zero.

        unit (Sequence): Coordinates of the identity.

        names (Sequence[str]): Basis names (default: `b0`, `b1`, ...).

    Examples:
        >>> from pcross.linalg import QQ
        >>> a = StructureAlgebra(QQ, 1, {(0, 0): {0: 1}}, (1,))
        >>> a.names, a.is_commutative()
        (('b0',), True)
        >>> StructureAlgebra(QQ, 1, {(0, 2): {0: 1}}, (1,))
        Traceback (most recent call last):
        pcross.utils.DimensionMismatch: Structure constant index (0, 2) out of range
    """

    def __init__(self, field, dim, consts, unit, names=None):
        self.field = field
        self.dim = dim
        self.names = tuple(names) if names else tuple("b%i" % i for i in range(dim))
        self.unit = field.vector(unit)
        self.consts = {}

        if len(self.names) != dim:
            msg = "Got %i names for dimension %i"
            raise DimensionMismatch(msg % (len(self.names), dim))

        if len(self.unit) != dim:
            msg = "Unit has length %i, expected %i"
            raise DimensionMismatch(msg % (len(self.unit), dim))

        for (i, j), column in consts.items():
            if not (0 <= i < dim and 0 <= j < dim):
                msg = "Structure constant index %s out of range"
                raise DimensionMismatch(msg % ((i, j),))

            entries = {}

            for k, c in column.items():
                if not 0 <= k < dim:
                    msg = "Structure constant b%i b%i has coordinate %i" % (i, j, k)
                    raise DimensionMismatch(msg)

                c = field(c)

                if c != 0:
                    entries[k] = c

            if entries:
                self.consts[(i, j)] = entries

    @classmethod
    def from_table(cls, field, table, unit, names=None):
        """Builds an algebra from dense constants `table[i][j]` (a vector)

        Examples:
            >>> from pcross.linalg import QQ
            >>> a = StructureAlgebra.from_table(QQ, [[[1, 0], [0, 1]],
            ...                                      [[0, 1], [0, 0]]], (1, 0))
            >>> a == dual_numbers(QQ)
            True
        """
        dim = len(table)
        consts = {}

        for i, row in enumerate(table):
            if len(row) != dim:
                msg = "Row %i of the table has length %i"
                raise DimensionMismatch(msg % (i, len(row)))

            for j, vector in enumerate(row):
                if len(vector) != dim:
                    msg = "Product b%i b%i has %i coordinates, expected %i"
                    raise DimensionMismatch(msg % (i, j, len(vector), dim))

                consts[(i, j)] = dict(enumerate(vector))

        return cls(field, dim, consts, unit, names)

    def table(self):
        """The dense constants, `table[i][j]` the coordinates of b_i b_j"""
        return [[self.product(i, j) for j in range(self.dim)] for i in range(self.dim)]

    def product(self, i, j):
        vector = [self.field.zero] * self.dim

        for k, c in self.consts.get((i, j), {}).items():
            vector[k] = c

        return tuple(vector)

    def mul_vec(self, x, y):
        """Multiplies two coordinate vectors"""
        result = [self.field.zero] * self.dim
        ys = [(j, b) for j, b in enumerate(y) if b != 0]

        for i, a in enumerate(x):
            if a == 0:
                continue

            for j, b in ys:
                column = self.consts.get((i, j))

                if column:
                    ab = a * b

                    for k, c in column.items():
                        result[k] += ab * c

        return tuple(result)

    def left_matrix(self, x):
        """The matrix of y -> x y"""
        columns = [self.mul_vec(x, self.unit_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(self.field, columns, rows=self.dim)

    def right_matrix(self, x):
        """The matrix of y -> y x"""
        columns = [self.mul_vec(self.unit_vector(j), x) for j in range(self.dim)]
        return Matrix.from_columns(self.field, columns, rows=self.dim)

    def unit_vector(self, i):
        return linalg.unit_vector(self.field, self.dim, i)

    def element(self, coords):
        return AlgebraElement(self, coords)

    def basis_element(self, i):
        return AlgebraElement(self, self.unit_vector(i))

    @property
    def one(self):
        return AlgebraElement(self, self.unit)

    @property
    def zero(self):
        return AlgebraElement(self, linalg.zero_vector(self.field, self.dim))

    def is_commutative(self):
        return all(
            self.product(i, j) == self.product(j, i)
            for i in range(self.dim)
            for j in range(i)
        )

    def fmt(self, vector):
        """Renders coordinates as a combination of basis names

        Examples:
            >>> from pcross.linalg import QQ
            >>> a = product_of_fields(QQ, 2)
            >>> a.fmt((1, Fraction(-1, 2)))
            'e1 - 1/2*e2'
            >>> a.fmt((0, 0))
            '0'
        """
        terms = []

        for c, name in zip(vector, self.names):
            if c == 0:
                continue
            elif c == 1:
                text = name
            elif c == -1:
                text = "-%s" % name
            else:
                text = "%s*%s" % (c, name)

            if terms and text.startswith("-"):
                terms.append("- %s" % text[1:])
            elif terms:
                terms.append("+ %s" % text)
            else:
                terms.append(text)

        return " ".join(terms) or "0"

    def __eq__(self, other):
        return (
            isinstance(other, StructureAlgebra)
            and self.field == other.field
            and self.dim == other.dim
            and self.consts == other.consts
            and self.unit == other.unit
        )

    def __hash__(self):
        return hash((self.field, self.dim, self.unit))

    def __repr__(self):
        return "<StructureAlgebra dim %i over %s>" % (self.dim, self.field)


class AlgebraElement(object):
    """An element of a :class:`StructureAlgebra` by coordinates

    Examples:
        >>> from pcross.linalg import QQ
        >>> a = product_of_fields(QQ, 2)
        >>> e1, e2 = a.basis_element(0), a.basis_element(1)
        >>> str(e1 * e2), str(2 * e1 + e2)
        ('0', '2*e1 + e2')
    """

    def __init__(self, parent, coords):
        self.parent = parent
        self.coords = parent.field.vector(coords)

        if len(self.coords) != parent.dim:
            msg = "Element has %i coordinates, expected %i"
            raise DimensionMismatch(msg % (len(self.coords), parent.dim))

    def _check(self, other):
        if not isinstance(other, AlgebraElement):
            return False

        if not (other.parent is self.parent or other.parent == self.parent):
            raise ParentMismatch("Elements belong to different algebras")

        return True

    def __add__(self, other):
        self._check(other)
        return AlgebraElement(self.parent, vadd(self.coords, other.coords))

    def __sub__(self, other):
        self._check(other)
        return AlgebraElement(self.parent, vsub(self.coords, other.coords))

    def __neg__(self):
        return AlgebraElement(self.parent, vscale(-self.parent.field.one, self.coords))

    def __mul__(self, other):
        if isinstance(other, AlgebraElement):
            return multiply(self, other)

        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        return AlgebraElement(self.parent, vscale(self.parent.field(c), self.coords))

    @property
    def is_zero(self):
        return is_zero(self.coords)

    def __eq__(self, other):
        return (
            isinstance(other, AlgebraElement)
            and self.parent == other.parent
            and self.coords == other.coords
        )

    def __hash__(self):
        return hash(self.coords)

    def __repr__(self):
        return "<AlgebraElement %s>" % self

    def __str__(self):
        return self.parent.fmt(self.coords)


def multiply(x, y):
    """The product of two elements of the same algebra

    Examples:
        >>> from pcross.linalg import QQ
        >>> a, b = dual_numbers(QQ), product_of_fields(QQ, 2)
        >>> str(multiply(a.one, a.basis_element(1)))
        'x'
        >>> multiply(a.one, b.one)
        Traceback (most recent call last):
        pcross.utils.ParentMismatch: Elements belong to different algebras
    """
    x._check(y)
    return AlgebraElement(x.parent, x.parent.mul_vec(x.coords, y.coords))


def _names(prefix, count):
    return ["%s%i" % (prefix, i) for i in range(1, count + 1)]


def field_algebra(field):
    """The field itself as a one-dimensional algebra"""
    return StructureAlgebra(field, 1, {(0, 0): {0: 1}}, (1,), names=["1"])


def zero_algebra(field):
    return StructureAlgebra(field, 0, {}, (), names=[])


def product_of_fields(field, k):
    """K x ... x K (k copies) on orthogonal idempotents e1..ek"""
    consts = {(i, i): {i: 1} for i in range(k)}
    return StructureAlgebra(field, k, consts, (1,) * k, names=_names("e", k))


def dual_numbers(field):
    """K[x]/(x^2) on the basis 1, x"""
    consts = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1}}
    return StructureAlgebra(field, 2, consts, (1, 0), names=["1", "x"])


def matrix_algebra(field, n):
    """M_n(K) on the matrix units E_ij in row major order

    Examples:
        >>> from pcross.linalg import QQ
        >>> matrix_algebra(QQ, 2).names
        ('E11', 'E12', 'E21', 'E22')
    """
    units = [(i, j) for i in range(n) for j in range(n)]
    return _matrix_units(field, n, units)


def upper_triangular(field, n):
    """Upper triangular n x n matrices on E_ij (i <= j)

    Examples:
        >>> from pcross.linalg import QQ
        >>> upper_triangular(QQ, 2).names
        ('E11', 'E12', 'E22')
    """
    units = [(i, j) for i in range(n) for j in range(n) if i <= j]
    return _matrix_units(field, n, units)


def _matrix_units(field, n, units):
    index = {u: k for k, u in enumerate(units)}
    consts = {}

    for (a, (i, j)), (b, (k, l)) in product(enumerate(units), repeat=2):
        if j == k:
            consts[(a, b)] = {index[(i, l)]: 1}

    unit = [1 if i == j else 0 for i, j in units]
    names = ["E%i%i" % (i + 1, j + 1) for i, j in units]
    return StructureAlgebra(field, len(units), consts, unit, names=names)


def group_algebra(field, group):
    """K[G] on the group elements of a finite group

    Examples:
        >>> from pcross.linalg import GF
        >>> from pcross.groups import make_cyclic
        >>> a = group_algebra(GF(2), make_cyclic(2))
        >>> a.names, len(jacobson_radical(a))
        (('e', 'g'), 1)
    """
    elements = group.elements
    consts = {(g, h): {group.mul(g, h): 1} for g in elements for h in elements}
    unit = linalg.unit_vector(field, group.order, group.e)
    return StructureAlgebra(field, group.order, consts, unit, names=group.labels)


def direct_sum(a, b):
    """A x B with block diagonal constants and unit (1_A, 1_B)

    Examples:
        >>> from pcross.linalg import QQ
        >>> r = direct_sum(field_algebra(QQ), field_algebra(QQ))
        >>> r.dim, r.names, r.unit
        (2, ('1', "1'"), (Fraction(1, 1), Fraction(1, 1)))
        >>> direct_sum(r, zero_algebra(QQ)) == r
        True
    """
    if a.field != b.field:
        raise MalformedInput("Cannot add algebras over %s and %s" % (a.field, b.field))

    n = a.dim
    consts = dict(a.consts)

    for (i, j), column in b.consts.items():
        consts[(i + n, j + n)] = {k + n: c for k, c in column.items()}

    taken = set(a.names)
    names = list(a.names)

    for name in b.names:
        while name in taken:
            name += "'"

        taken.add(name)
        names.append(name)

    return StructureAlgebra(a.field, n + b.dim, consts, a.unit + b.unit, names=names)


def validate_algebra(a):
    """Checks the two-sided unit and associativity on all basis triples

    Examples:
        >>> from pcross.linalg import QQ
        >>> validate_algebra(matrix_algebra(QQ, 2)).passed
        True
        >>> consts = {(0, 0): {0: 1}, (0, 1): {1: 1}, (1, 0): {1: 1},
        ...           (1, 1): {0: 1, 1: 1}}
        >>> bad = StructureAlgebra(QQ, 2, consts, (1, 0))
        >>> validate_algebra(bad).passed
        True
        >>> bad.consts[(0, 1)] = {0: 1}
        >>> report = validate_algebra(bad)
        >>> report.axioms[0]
        'unit'
    """
    report = Report("algebra")
    n = a.dim

    for i in range(n):
        b = a.unit_vector(i)

        if a.mul_vec(a.unit, b) != b or a.mul_vec(b, a.unit) != b:
            msg = "1 is not a two-sided identity for %s" % a.names[i]
            report.fail("unit", msg, basis=a.names[i])
            break

    found = 0

    for i, j in product(range(n), repeat=2):
        ij = a.product(i, j)

        for k in range(n):
            left = a.mul_vec(ij, a.unit_vector(k))
            right = a.mul_vec(a.unit_vector(i), a.product(j, k))

            if left != right:
                names = (a.names[i], a.names[j], a.names[k])
                msg = "(%s %s) %s != %s (%s %s)" % (names + names)
                report.fail("associativity", msg, triple=names)
                found += 1

                if found >= MAX_WITNESSES:
                    return report

    return report


def _nullspace(field, n, blocks):
    """A canonical basis of the common kernel of stacked matrices"""
    if not blocks:
        return Subspace.whole(field, n).basis

    stacked = blocks[0]

    for block in blocks[1:]:
        stacked = stacked.vstack(block)

    return linalg.span_basis(field, linalg.kernel_basis(stacked), n)


def center(a):
    """A canonical basis of the center {z : z b = b z for every basis b}

    Examples:
        >>> from pcross.linalg import QQ
        >>> len(center(upper_triangular(QQ, 2)))
        1
        >>> len(center(product_of_fields(QQ, 3)))
        3
    """
    blocks = []

    for i in range(a.dim):
        b = a.unit_vector(i)
        blocks.append(a.right_matrix(b) - a.left_matrix(b))

    return _nullspace(a.field, a.dim, blocks)


def trace_vector(a):
    """(tr L_{b_0}, ..., tr L_{b_{n-1}}) for the left regular representation"""
    traces = []

    for k in range(a.dim):
        entries = (a.consts.get((k, j), {}).get(j) for j in range(a.dim))
        traces.append(sum((c for c in entries if c is not None), a.field.zero))

    return tuple(traces)


def _frobenius_matrix(a):
    p = a.field.characteristic
    columns = []

    for i in range(a.dim):
        x = power = a.unit_vector(i)

        for _ in range(p - 1):
            power = a.mul_vec(power, x)

        columns.append(power)

    return Matrix.from_columns(a.field, columns, rows=a.dim)


def jacobson_radical(a):
    """A canonical basis of the Jacobson radical J(A)

    Over the rationals and over GF(p) with p > dim A this is the kernel of
    the trace form (x, y) -> tr(L_{xy}). Commutative algebras over GF(p) with
    p <= dim A use the kernel of an iterated Frobenius map x -> x^p instead.

    Raises:
        UnsupportedField: noncommutative algebra over GF(p) with p <= dim A

    Examples:
        >>> from pcross.linalg import QQ, GF
        >>> jacobson_radical(matrix_algebra(QQ, 2))
        ()
        >>> [[str(c) for c in v] for v in jacobson_radical(upper_triangular(QQ, 2))]
        [['0', '1', '0']]
        >>> jacobson_radical(matrix_algebra(GF(2), 2))
        Traceback (most recent call last):
        pcross.utils.UnsupportedField: GF(2) radical needs commutativity or p > 4
    """
    field, n = a.field, a.dim
    p = field.characteristic

    if p and p <= n:
        if not a.is_commutative():
            msg = "GF(%i) radical needs commutativity or p > %i"
            raise UnsupportedField(msg % (p, n), witness={"p": p, "dim": n})

        frobenius = _frobenius_matrix(a)
        iterated, reach = frobenius, p

        while reach < n:
            iterated = iterated * frobenius
            reach *= p

        basis = linalg.span_basis(field, linalg.kernel_basis(iterated), n)
        logger.debug("frobenius kernel radical of dim %i in dim %i", len(basis), n)
        return basis

    traces = trace_vector(a)
    rows = [[dot(a.product(i, j), traces) for j in range(n)] for i in range(n)]
    gram = Matrix.from_rows(field, rows, cols=n)
    basis = linalg.span_basis(field, linalg.kernel_basis(gram), n)
    logger.debug("trace form radical of dim %i in dim %i", len(basis), n)
    return basis


def is_semisimple(a):
    return not jacobson_radical(a)


def is_nilpotent(a, x):
    """Whether x^(dim + 1) = 0"""
    power = x

    for _ in range(a.dim):
        if is_zero(power):
            return True

        power = a.mul_vec(power, x)

    return is_zero(power)


def is_two_sided_ideal(a, basis):
    """Finds a product escaping span(basis), or None if it is an ideal

    Examples:
        >>> from pcross.linalg import QQ
        >>> a = upper_triangular(QQ, 2)
        >>> is_two_sided_ideal(a, [(0, 1, 0)]) is None
        True
        >>> is_two_sided_ideal(a, [(1, 0, 0)])
        {'side': 'right', 'basis': 'E12', 'element': 'E11', 'product': 'E12'}
    """
    space = Subspace(a.field, a.dim, basis)

    for v in space.basis:
        for i in range(a.dim):
            b = a.unit_vector(i)

            for side, prod in [("left", a.mul_vec(b, v)), ("right", a.mul_vec(v, b))]:
                if prod not in space:
                    return {
                        "side": side,
                        "basis": a.names[i],
                        "element": a.fmt(v),
                        "product": a.fmt(prod),
                    }

    return None


def check_ideal(a, basis):
    witness = is_two_sided_ideal(a, basis)

    if witness:
        msg = "Not a two-sided ideal: %s escapes" % witness["product"]
        raise NotAnIdeal(msg, witness=witness)

    return Subspace(a.field, a.dim, basis)


def is_subalgebra(a, basis):
    """Finds a product of basis vectors escaping span(basis), or None"""
    space = Subspace(a.field, a.dim, basis)

    for u, v in product(space.basis, repeat=2):
        prod = a.mul_vec(u, v)

        if prod not in space:
            return {"left": a.fmt(u), "right": a.fmt(v), "product": a.fmt(prod)}

    return None


class IdempotentIdeal(object):
    """The ideal R e generated by a central idempotent e

    Attributes:
        generator (tuple): The idempotent e.
        space (Subspace): R e, which is also the ideal's canonical basis holder.
    """

    def __init__(self, algebra, generator, space):
        self.algebra = algebra
        self.generator = generator
        self.space = space

    @property
    def basis(self):
        return self.space.basis

    @property
    def dim(self):
        return self.space.dim

    def __contains__(self, vector):
        return vector in self.space

    def __repr__(self):
        generator = self.algebra.fmt(self.generator)
        return "<IdempotentIdeal %s, dim %i>" % (generator, self.dim)


def is_central_idempotent(a, e):
    e = a.field.vector(e)

    if a.mul_vec(e, e) != e:
        return False

    return all(
        a.mul_vec(e, b) == a.mul_vec(b, e)
        for b in (a.unit_vector(i) for i in range(a.dim))
    )


def ideal_from_idempotent(a, e, check=True):
    """The ideal R e as the column space of right multiplication by e

    Examples:
        >>> from pcross.linalg import QQ
        >>> a = product_of_fields(QQ, 3)
        >>> ideal_from_idempotent(a, (1, 1, 0)).dim
        2
        >>> ideal_from_idempotent(upper_triangular(QQ, 2), (1, 0, 0))
        Traceback (most recent call last):
        pcross.utils.MalformedInput: E11 is not a central idempotent
    """
    e = a.field.vector(e)

    if check and not is_central_idempotent(a, e):
        msg = "%s is not a central idempotent" % a.fmt(e)
        raise MalformedInput(msg, witness={"element": a.fmt(e)})

    space = Subspace(a.field, a.dim, a.right_matrix(e).columns())
    return IdempotentIdeal(a, e, space)


def ideal_identity(a, basis):
    """The identity element of span(basis) as a ring, or None

    Examples:
        >>> from pcross.linalg import QQ
        >>> a = product_of_fields(QQ, 2)
        >>> [str(c) for c in ideal_identity(a, [(3, 0)])]
        ['1', '0']
        >>> ideal_identity(dual_numbers(QQ), [(0, 1)]) is None
        True
    """
    basis = list(Subspace(a.field, a.dim, basis).basis)

    if not basis:
        return linalg.zero_vector(a.field, a.dim)

    columns = []

    for v in basis:
        column = ()

        for x in basis:
            column += a.mul_vec(v, x) + a.mul_vec(x, v)

        columns.append(column)

    rhs = ()

    for x in basis:
        rhs += x + x

    coords = linalg.solve(Matrix.from_columns(a.field, columns, rows=len(rhs)), rhs)

    if coords is None:
        return None

    return linalg.Subspace(a.field, a.dim, basis).combine(coords)


def corner_inverse(a, w, e):
    """The inverse of w inside the corner R e with identity e, or None

    Examples:
        >>> from pcross.linalg import QQ
        >>> a = product_of_fields(QQ, 2)
        >>> [str(c) for c in corner_inverse(a, (2, 0), (1, 0))]
        ['1/2', '0']
        >>> corner_inverse(a, (0, 1), (1, 0)) is None
        True
    """
    field = a.field
    w, e = field.vector(w), field.vector(e)
    corner = Subspace(field, a.dim, a.right_matrix(e).columns())

    if not corner.dim:
        return linalg.zero_vector(field, a.dim)

    columns = [a.mul_vec(w, v) + a.mul_vec(v, w) for v in corner.basis]
    coords = linalg.solve(Matrix.from_columns(field, columns, rows=2 * a.dim), e + e)
    return None if coords is None else corner.combine(coords)


def quotient(a, basis):
    """A / I on the complement of the rref pivot columns of I

    Returns:
        Tuple[StructureAlgebra, Matrix]: the quotient and the projection

    Raises:
        NotAnIdeal: span(basis) is not a two-sided ideal

    Examples:
        >>> from pcross.linalg import QQ
        >>> q, proj = quotient(dual_numbers(QQ), [(0, 1)])
        >>> q.dim, q.names, proj.shape
        (1, ('1',), (1, 2))
        >>> ut = upper_triangular(QQ, 2)
        >>> quotient(ut, jacobson_radical(ut))[0] == product_of_fields(QQ, 2)
        True
    """
    ideal = check_ideal(a, basis)
    keep = [j for j in range(a.dim) if j not in set(ideal.pivots)]

    def project(vector):
        reduced = ideal.reduce(vector)
        return tuple(reduced[j] for j in keep)

    consts = {}

    for x, i in enumerate(keep):
        for y, j in enumerate(keep):
            consts[(x, y)] = dict(enumerate(project(a.product(i, j))))

    names = [a.names[j] for j in keep]
    q = StructureAlgebra(a.field, len(keep), consts, project(a.unit), names=names)
    columns = [project(a.unit_vector(i)) for i in range(a.dim)]
    projection = Matrix.from_columns(a.field, columns, rows=len(keep))
    return q, projection


def check_algebra_map(a, b, m, bijective=False, name="algebra map"):
    """Checks that the matrix m (b.dim x a.dim) is a unital algebra map

    Examples:
        >>> from pcross.linalg import QQ
        >>> a = product_of_fields(QQ, 2)
        >>> swap = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
        >>> check_algebra_map(a, a, swap, bijective=True).passed
        True
        >>> collapse = Matrix.from_rows(QQ, [[1, 1], [0, 0]])
        >>> sorted(set(check_algebra_map(a, a, collapse).axioms))
        ['multiplicative', 'unit']
    """
    report = Report(name)

    if m.shape != (b.dim, a.dim):
        msg = "map has shape %ix%i, expected %ix%i" % (m.shape + (b.dim, a.dim))
        report.fail("shape", msg)
        return report

    report.check(
        m.apply(a.unit) == b.unit,
        "unit",
        "the unit maps to %s" % b.fmt(m.apply(a.unit)),
    )

    images = [m.column(i) for i in range(a.dim)]
    found = 0

    for i, j in product(range(a.dim), repeat=2):
        if m.apply(a.product(i, j)) != b.mul_vec(images[i], images[j]):
            msg = "f(%s %s) != f(%s) f(%s)" % ((a.names[i], a.names[j]) * 2)
            report.fail("multiplicative", msg, pair=(a.names[i], a.names[j]))
            found += 1

            if found >= MAX_WITNESSES:
                break

    if bijective:
        rank = linalg.rank(m)
        msg = "map has rank %i between dimensions %i and %i" % (rank, a.dim, b.dim)
        report.check(rank == a.dim == b.dim, "bijective", msg, rank=rank)

    return report


def commutator_span(a):
    """A basis of span{b_i b_j - b_j b_i}"""
    vectors = [
        vsub(a.product(i, j), a.product(j, i))
        for i in range(a.dim)
        for j in range(i)
    ]
    return linalg.span_basis(a.field, vectors, a.dim)


class LinearForm(object):
    """A linear form on an algebra by its values on the basis

    Args:
        coords (Sequence): lambda(b_0), ..., lambda(b_{n-1}).

        method (str): How the form was found: `candidate`, `symbolic`,
            `grid` or `sampling`.

        error_bound (Fraction): Probability that the search missed a form (only
            nonzero for a negative `sampling` answer).
    """

    def __init__(self, coords, method="candidate", error_bound=0):
        self.coords = tuple(coords)
        self.method = method
        self.error_bound = Fraction(error_bound)

    def __call__(self, vector):
        return dot(self.coords, vector)

    def gram(self, a):
        """The Gram matrix lambda(b_i b_j)"""
        rows = [[self(a.product(i, j)) for j in range(a.dim)] for i in range(a.dim)]
        return Matrix.from_rows(a.field, rows, cols=a.dim)

    def is_nondegenerate(self, a):
        return not a.dim or linalg.det(self.gram(a)) != 0

    def is_symmetric(self, a):
        return all(self(v) == 0 for v in commutator_span(a))

    def to_dict(self):
        return {"coords": self.coords, "method": self.method}

    def __repr__(self):
        coords = ", ".join(map(str, self.coords))
        return "<LinearForm (%s) via %s>" % (coords, self.method)


class FormSearch(object):
    """The outcome of a form search: a form, or none with the method used and
    the probability that a form was missed"""

    def __init__(self, form, method, error_bound=0):
        self.form = form
        self.method = method
        self.error_bound = Fraction(error_bound)

    @property
    def exact(self):
        return self.error_bound == 0

    def to_dict(self):
        return {
            "form": self.form.coords if self.form else None,
            "method": self.method,
            "error_bound": self.error_bound,
        }


def _normalized(vector):
    lead = next((c for c in vector if c != 0), None)
    return vscale(1 / lead, vector) if lead is not None else vector


def _sympy_scalar(value):
    if isinstance(value, Fraction):
        return sympy.Rational(value.numerator, value.denominator)

    return sympy.Integer(int(value))


def _gram_determinant(a, allowed):
    gens = sympy.symbols("t0:%i" % len(allowed))
    rows = []

    for i in range(a.dim):
        row = []

        for j in range(a.dim):
            ij = a.product(i, j)
            terms = (_sympy_scalar(dot(ij, u)) * t for u, t in zip(allowed, gens))
            row.append(sum(terms, sympy.Integer(0)))

        rows.append(row)

    return sympy.expand(sympy.Matrix(rows).det(method="berkowitz")), list(gens)


def _vanishes(expr, gens, modulus):
    if not gens:
        return (int(expr) % modulus if modulus else expr) == 0
    elif modulus:
        return sympy.Poly(expr, *gens, modulus=modulus).is_zero
    else:
        return expr == 0


def _nonvanishing_point(expr, gens, values, modulus=None):
    """Values for gens at which expr is nonzero (mod modulus), or None"""
    if _vanishes(expr, gens, modulus):
        return None
    elif not gens:
        return []

    head, rest = gens[0], gens[1:]

    for value in values:
        reduced = sympy.expand(expr.subs(head, value))
        point = _nonvanishing_point(reduced, rest, values, modulus)

        if point is not None:
            return [value] + point

    return None


def _combine(field, allowed, point, n):
    vector = linalg.zero_vector(field, n)

    for c, u in zip(point, allowed):
        vector = vadd(vector, vscale(field(c), u))

    return vector


def find_form(a, symmetric=False, seed=0):
    """Searches for a linear form with nonsingular Gram matrix

    The candidates (trace form, then the dual basis) are tried first. Failing
    that, dimensions up to 6 decide exactly through the symbolic Gram
    determinant, small allowed spaces through an exhaustive grid (a nonzero
    polynomial of degree <= n per variable cannot vanish on (n + 1)^m points)
    and anything larger through seeded random sampling with an error bound.

    Args:
        a (StructureAlgebra): The algebra.
        symmetric (bool): Restrict to forms vanishing on commutators.
        seed (int): The sampling seed.

    Returns:
        FormSearch

    Examples:
        >>> from pcross.linalg import QQ
        >>> search = find_form(upper_triangular(QQ, 2))
        >>> search.form, search.method, search.exact
        (None, 'symbolic', True)
    """
    field, n = a.field, a.dim

    if not n:
        return FormSearch(LinearForm((), "candidate"), "candidate")

    if symmetric:
        commutators = list(commutator_span(a))

        if commutators:
            rows = Matrix.from_rows(field, commutators, cols=n)
            allowed = list(linalg.span_basis(field, linalg.kernel_basis(rows), n))
        else:
            allowed = list(Subspace.whole(field, n).basis)
    else:
        allowed = list(Subspace.whole(field, n).basis)

    def accept(coords, method):
        form = LinearForm(coords, method)
        return form if form.is_nondegenerate(a) else None

    candidates = [_normalized(trace_vector(a))] + allowed

    if allowed:
        candidates.append(_combine(field, allowed, [1] * len(allowed), n))

    allowed_space = Subspace(field, n, allowed)

    for coords in candidates:
        if coords in allowed_space and not is_zero(coords):
            form = accept(coords, "candidate")

            if form:
                return FormSearch(form, "candidate")

    if not allowed:
        return FormSearch(None, "candidate")

    p, m = field.characteristic, len(allowed)
    values = list(range(min(n + 1, p) if p else n + 1))

    if n <= SYMBOLIC_LIMIT:
        expr, gens = _gram_determinant(a, allowed)
        values = list(range(p)) if p else values
        point = _nonvanishing_point(expr, gens, values, modulus=p or None)
        logger.debug("symbolic gram determinant in %i variables: %s", m, expr)

        if point is None:
            return FormSearch(None, "symbolic")

        form = accept(_combine(field, allowed, point, n), "symbolic")
        return FormSearch(form, "symbolic")

    if len(values) ** m <= GRID_LIMIT:
        for point in product(values, repeat=m):
            form = accept(_combine(field, allowed, point, n), "grid")

            if form:
                return FormSearch(form, "grid")

        return FormSearch(None, "grid")

    rng = random.Random(seed)
    size = p or 16 * (n + 1)

    for _ in range(SAMPLES):
        point = [rng.randrange(size) for _ in range(m)]
        form = accept(_combine(field, allowed, point, n), "sampling")

        if form:
            return FormSearch(form, "sampling")

    bound = Fraction(n, size) ** SAMPLES if n < size else Fraction(1)
    logger.warning("no form found by sampling; miss probability <= %s", bound)
    return FormSearch(None, "sampling", bound)


def frobenius_form(a, seed=0):
    """A form with nonsingular Gram matrix, or None

    Examples:
        >>> from pcross.linalg import QQ
        >>> frobenius_form(upper_triangular(QQ, 2)) is None
        True
    """
    return find_form(a, seed=seed).form


def symmetric_form(a, seed=0):
    """A nondegenerate form vanishing on every commutator, or None"""
    return find_form(a, symmetric=True, seed=seed).form
