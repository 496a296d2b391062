# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.linalg
~~~~~~~~~~~~~

Exact scalars (the rationals and prime fields) and dense exact linear algebra.
No floating point is used anywhere.

Examples:
    basic usage::

        >>> m = Matrix.from_rows(QQ, [[2, 4], [1, 2]])
        >>> reduced, pivots, rank = rref(m)
        >>> print(reduced)
        [[1, 2], [0, 0]]
        >>> pivots, rank
        ((0,), 1)
        >>> kernel_basis(Matrix.from_rows(QQ, [[1, 2]]))
        [(Fraction(-2, 1), Fraction(1, 1))]

    prime fields::

        >>> F5 = GF(5)
        >>> F5(3) * F5(2)
        Residue(1, 5)
        >>> det(Matrix.from_rows(F5, [[2, 1], [1, 1]]))
        Residue(1, 5)

Attributes:
    QQ (FieldSpec): The rational numbers
"""

from fractions import Fraction
from itertools import chain

from sympy import isprime

from .utils import MalformedInput, DimensionMismatch, get_logger

logger = get_logger(__name__)


class Residue(object):
    """An element of the prime field GF(p), stored in [0, p)

    Examples:
        >>> a = Residue(7, 5)
        >>> a
        Residue(2, 5)
        >>> a + 4 == 1
        True
        >>> 1 / a
        Residue(3, 5)
        >>> str(-a)
        '3'
    """

    __slots__ = ("value", "modulus")

    def __init__(self, value, modulus):
        self.value = value % modulus
        self.modulus = modulus

    def _other(self, other):
        if isinstance(other, Residue):
            if other.modulus != self.modulus:
                msg = "Mixed prime fields GF(%i) and GF(%i)"
                raise MalformedInput(msg % (self.modulus, other.modulus))

            return other.value
        elif isinstance(other, int):
            return other % self.modulus
        elif isinstance(other, Fraction):
            return _fraction_mod(other, self.modulus)
        else:
            return None

    def _new(self, value):
        return Residue(value, self.modulus)

    def __add__(self, other):
        value = self._other(other)
        return NotImplemented if value is None else self._new(self.value + value)

    __radd__ = __add__

    def __sub__(self, other):
        value = self._other(other)
        return NotImplemented if value is None else self._new(self.value - value)

    def __rsub__(self, other):
        value = self._other(other)
        return NotImplemented if value is None else self._new(value - self.value)

    def __mul__(self, other):
        value = self._other(other)
        return NotImplemented if value is None else self._new(self.value * value)

    __rmul__ = __mul__

    def __truediv__(self, other):
        value = self._other(other)

        if value is None:
            return NotImplemented

        return self * self._new(value).inverse()

    def __rtruediv__(self, other):
        value = self._other(other)
        return NotImplemented if value is None else self.inverse() * value

    def __neg__(self):
        return self._new(-self.value)

    def __pow__(self, exponent):
        if exponent < 0:
            return self.inverse() ** -exponent

        return self._new(pow(self.value, exponent, self.modulus))

    def inverse(self):
        if not self.value:
            raise ZeroDivisionError("Residue 0 has no inverse in GF(%i)" % self.modulus)

        return self._new(pow(self.value, self.modulus - 2, self.modulus))

    def __eq__(self, other):
        value = self._other(other)
        return NotImplemented if value is None else self.value == value

    def __hash__(self):
        return hash(self.value)

    def __bool__(self):
        return bool(self.value)

    def __int__(self):
        return self.value

    def __repr__(self):
        return "Residue(%i, %i)" % (self.value, self.modulus)

    def __str__(self):
        return str(self.value)


def _fraction_mod(value, p):
    if not value.denominator % p:
        msg = "%s has no image in GF(%i): denominator divisible by %i"
        raise MalformedInput(msg % (value, p, p))

    return value.numerator * pow(value.denominator, p - 2, p) % p


class FieldSpec(object):
    """A base field: the rationals (`p=None`) or the prime field GF(p)

    Args:
        p (int): The prime modulus (default: None, the rationals).

    Examples:
        >>> QQ("3/6")
        Fraction(1, 2)
        >>> GF(7)("1/2")
        Residue(4, 7)
        >>> FieldSpec.from_string("GF(3)")
        GF(3)
        >>> FieldSpec(4)
        Traceback (most recent call last):
        pcross.utils.MalformedInput: GF(4): 4 is not prime
    """

    def __init__(self, p=None):
        if p is not None and not (isinstance(p, int) and isprime(p)):
            raise MalformedInput("GF(%s): %s is not prime" % (p, p))

        self.p = p
        self.zero = self(0)
        self.one = self(1)

    @classmethod
    def from_string(cls, text):
        """Parses "Q" or "GF(p)"

        Examples:
            >>> FieldSpec.from_string("Q")
            Q
        """
        cleaned = str(text).strip().replace(" ", "")

        if cleaned in {"Q", "QQ"}:
            return QQ
        elif cleaned.upper().startswith("GF(") and cleaned.endswith(")"):
            try:
                p = int(cleaned[3:-1])
            except ValueError:
                raise MalformedInput("Invalid field: %s" % text)

            return cls(p)
        else:
            raise MalformedInput("Invalid field: %s. Use Q or GF(p)" % text)

    @property
    def is_rational(self):
        return self.p is None

    @property
    def kind(self):
        return "Rationals" if self.is_rational else "PrimeField"

    @property
    def characteristic(self):
        return self.p or 0

    def __call__(self, value):
        """Coerces `value` (int, Fraction, Residue or a "p/q" string)"""
        if self.is_rational:
            if type(value) is Fraction:
                return value
            elif isinstance(value, Residue):
                raise MalformedInput("Mixed fields: %r is not rational" % value)
        elif isinstance(value, Residue):
            if value.modulus != self.p:
                msg = "Mixed fields: %r is not in GF(%i)"
                raise MalformedInput(msg % (value, self.p))

            return value

        if isinstance(value, str):
            try:
                value = Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise MalformedInput("Invalid scalar: %r" % value)
        elif not isinstance(value, (int, Fraction)):
            raise MalformedInput("Invalid scalar: %r" % (value,))

        if self.is_rational:
            return Fraction(value)
        else:
            return Residue(_fraction_mod(Fraction(value), self.p), self.p)

    def vector(self, values):
        return tuple(self(v) for v in values)

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.p == other.p

    def __hash__(self):
        return hash(("FieldSpec", self.p))

    def __repr__(self):
        return "Q" if self.is_rational else "GF(%i)" % self.p

    __str__ = __repr__


QQ = FieldSpec()


def GF(p):
    """The prime field with p elements"""
    return FieldSpec(p)


def zero_vector(field, n):
    return (field.zero,) * n


def unit_vector(field, n, i):
    """The i-th standard basis vector of K^n

    Examples:
        >>> [str(x) for x in unit_vector(QQ, 3, 1)]
        ['0', '1', '0']
    """
    return tuple(field.one if j == i else field.zero for j in range(n))


def vadd(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vsub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vscale(c, v):
    return tuple(c * a for a in v)


def dot(u, v):
    return sum((a * b for a, b in zip(u, v)), 0 * u[0]) if u else 0


def is_zero(v):
    return all(x == 0 for x in v)


class Matrix(object):
    """An immutable dense matrix over a :class:`FieldSpec`, stored row major

    Args:
        field (FieldSpec): The base field.
        rows (int): Number of rows.
        cols (int): Number of columns.
        entries (Iterable): rows * cols scalars (coerced into `field`).

    Examples:
        >>> m = Matrix.from_rows(QQ, [[1, 2], [3, 4]])
        >>> m.shape
        (2, 2)
        >>> print(m * m)
        [[7, 10], [15, 22]]
        >>> [str(x) for x in m * (1, 1)]
        ['3', '7']
    """

    def __init__(self, field, rows, cols, entries):
        self.field = field
        self.rows = rows
        self.cols = cols
        self.entries = tuple(field(x) for x in entries)

        if len(self.entries) != rows * cols:
            msg = "Expected %i entries for a %ix%i matrix, got %i"
            raise DimensionMismatch(msg % (rows * cols, rows, cols, len(self.entries)))

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [tuple(r) for r in rows]
        ncols = len(rows[0]) if rows else (cols or 0)

        if any(len(r) != ncols for r in rows):
            raise DimensionMismatch("Ragged rows")

        return cls(field, len(rows), ncols, chain.from_iterable(rows))

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        """Builds a matrix whose j-th column is `columns[j]`

        Examples:
            >>> print(Matrix.from_columns(QQ, [(1, 2), (3, 4)]))
            [[1, 3], [2, 4]]
        """
        columns = [tuple(c) for c in columns]
        nrows = len(columns[0]) if columns else (rows or 0)
        entries = [columns[j][i] for i in range(nrows) for j in range(len(columns))]
        return cls(field, nrows, len(columns), entries)

    @classmethod
    def identity(cls, field, n):
        return cls(field, n, n, (field.one if i == j else field.zero
                                 for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, rows, cols, (field.zero,) * (rows * cols))

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def is_square(self):
        return self.rows == self.cols

    def __getitem__(self, key):
        i, j = key
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def row_list(self):
        return [self.row(i) for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def apply(self, vector):
        if len(vector) != self.cols:
            msg = "Vector of length %i for a matrix with %i columns"
            raise DimensionMismatch(msg % (len(vector), self.cols))

        zero = self.field.zero
        return tuple(
            sum((a * b for a, b in zip(self.row(i), vector) if a and b), zero)
            for i in range(self.rows)
        )

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                msg = "Cannot multiply %ix%i by %ix%i"
                raise DimensionMismatch(msg % (self.shape + other.shape))

            columns = [self.apply(c) for c in other.columns()]
            return Matrix.from_columns(self.field, columns, rows=self.rows)
        elif isinstance(other, (tuple, list)):
            return self.apply(other)
        else:
            return NotImplemented

    def _check_shape(self, other):
        if self.shape != other.shape:
            msg = "Shapes %ix%i and %ix%i differ"
            raise DimensionMismatch(msg % (self.shape + other.shape))

    def __add__(self, other):
        self._check_shape(other)
        entries = (a + b for a, b in zip(self.entries, other.entries))
        return Matrix(self.field, self.rows, self.cols, entries)

    def __sub__(self, other):
        self._check_shape(other)
        entries = (a - b for a, b in zip(self.entries, other.entries))
        return Matrix(self.field, self.rows, self.cols, entries)

    def __neg__(self):
        return self.scale(-self.field.one)

    def scale(self, c):
        c = self.field(c)
        return Matrix(self.field, self.rows, self.cols, (c * a for a in self.entries))

    def transpose(self):
        return Matrix.from_columns(self.field, self.row_list(), rows=self.cols)

    T = property(transpose)

    def hstack(self, other):
        rows = [a + b for a, b in zip(self.row_list(), other.row_list())]
        return Matrix.from_rows(self.field, rows, cols=self.cols + other.cols)

    def vstack(self, other):
        entries = self.entries + other.entries
        return Matrix(self.field, self.rows + other.rows, self.cols, entries)

    def trace(self):
        return sum((self[i, i] for i in range(min(self.shape))), self.field.zero)

    def is_zero(self):
        return is_zero(self.entries)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.shape == other.shape
            and self.field == other.field
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.shape, self.entries))

    def __repr__(self):
        return "<Matrix %ix%i over %s>" % (self.rows, self.cols, self.field)

    def __str__(self):
        rows = ("[%s]" % ", ".join(map(str, r)) for r in self.row_list())
        return "[%s]" % ", ".join(rows)


def _reduce_rows(field, rows, ncols):
    """Gauss-Jordan elimination restricted to the first `ncols` columns.
    Returns the reduced rows and the pivot columns."""
    rows = [list(r) for r in rows]
    pivots = []
    top = 0

    for c in range(ncols):
        if top == len(rows):
            break

        found = next((i for i in range(top, len(rows)) if rows[i][c] != 0), None)

        if found is None:
            continue

        rows[top], rows[found] = rows[found], rows[top]
        inv = field.one / rows[top][c]
        rows[top] = [x * inv for x in rows[top]]
        pivot_row = rows[top]

        for i, row in enumerate(rows):
            factor = row[c]

            if i != top and factor != 0:
                rows[i] = [a - factor * b for a, b in zip(row, pivot_row)]

        pivots.append(c)
        top += 1

    return rows, pivots


def rref(m):
    """Reduced row echelon form

    Args:
        m (Matrix): The matrix to reduce

    Returns:
        Tuple[Matrix, Tuple[int], int]: (reduced matrix, pivot columns, rank)

    Examples:
        >>> reduced, pivots, rank = rref(Matrix.identity(QQ, 3))
        >>> pivots, rank
        ((0, 1, 2), 3)
        >>> rref(Matrix.zeros(QQ, 2, 2))[1:]
        ((), 0)
    """
    rows, pivots = _reduce_rows(m.field, m.row_list(), m.cols)
    reduced = Matrix.from_rows(m.field, rows, cols=m.cols) if rows else m
    return reduced, tuple(pivots), len(pivots)


def rank(m):
    return rref(m)[2]


def kernel_basis(m):
    """A basis of the right null space {x : m x = 0}

    Examples:
        >>> kernel_basis(Matrix.identity(QQ, 2))
        []
        >>> len(kernel_basis(Matrix.zeros(QQ, 1, 3)))
        3
    """
    field = m.field
    rows, pivots = _reduce_rows(field, m.row_list(), m.cols)
    pivot_set = set(pivots)
    basis = []

    for free in range(m.cols):
        if free in pivot_set:
            continue

        vector = [field.zero] * m.cols
        vector[free] = field.one

        for i, p in enumerate(pivots):
            vector[p] = -rows[i][free]

        basis.append(tuple(vector))

    return basis


def solve(m, rhs):
    """Solves m x = rhs. Free variables are set to 0.

    Returns:
        Tuple or None: A solution, or None if the system is inconsistent

    Examples:
        >>> [str(x) for x in solve(Matrix.from_rows(QQ, [[1, 1]]), (3,))]
        ['3', '0']
        >>> solve(Matrix.from_rows(QQ, [[1], [1]]), (0, 1)) is None
        True
    """
    if len(rhs) != m.rows:
        msg = "Right hand side has length %i, expected %i"
        raise DimensionMismatch(msg % (len(rhs), m.rows))

    field = m.field
    augmented = [r + (field(b),) for r, b in zip(m.row_list(), rhs)]
    rows, pivots = _reduce_rows(field, augmented, m.cols)

    if any(row[-1] != 0 for row in rows[len(pivots):]):
        return None

    solution = [field.zero] * m.cols

    for i, p in enumerate(pivots):
        solution[p] = rows[i][-1]

    return tuple(solution)


def det(m):
    """The exact determinant

    Examples:
        >>> det(Matrix.from_rows(QQ, [[2, 1], [1, 1]]))
        Fraction(1, 1)
        >>> det(Matrix.from_rows(QQ, [[3, 5], [0, 0]]))
        Fraction(0, 1)
    """
    if not m.is_square:
        raise DimensionMismatch("Determinant of a non-square %ix%i matrix" % m.shape)

    field = m.field
    rows = [list(r) for r in m.row_list()]
    result = field.one

    for c in range(m.cols):
        found = next((i for i in range(c, m.rows) if rows[i][c] != 0), None)

        if found is None:
            return field.zero
        elif found != c:
            rows[c], rows[found] = rows[found], rows[c]
            result = -result

        pivot = rows[c][c]
        result *= pivot

        for i in range(c + 1, m.rows):
            factor = rows[i][c] / pivot

            if factor != 0:
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[c])]

    return result


def inverse(m):
    """The inverse of a square matrix

    Examples:
        >>> print(inverse(Matrix.from_rows(QQ, [[2, 1], [1, 1]])))
        [[1, -1], [-1, 2]]
    """
    if not m.is_square:
        raise DimensionMismatch("Cannot invert a non-square %ix%i matrix" % m.shape)

    n = m.rows
    identity = Matrix.identity(m.field, n)
    augmented = [a + b for a, b in zip(m.row_list(), identity.row_list())]
    rows, pivots = _reduce_rows(m.field, augmented, n)

    if len(pivots) < n:
        raise MalformedInput("Singular matrix (rank %i < %i)" % (len(pivots), n))

    return Matrix.from_rows(m.field, [r[n:] for r in rows], cols=n)


class Subspace(object):
    """A subspace of K^n held by its canonical (reduced row echelon) basis.
    Two subspaces are equal iff their canonical bases are.

    Args:
        field (FieldSpec): The base field.
        n (int): Ambient dimension.
        vectors (Iterable[tuple]): A spanning set.

    Examples:
        >>> s = Subspace(QQ, 3, [(1, 1, 0), (2, 2, 0)])
        >>> s.dim, s.pivots
        (1, (0,))
        >>> (3, 3, 0) in s
        True
        >>> s.coordinates((3, 3, 0))
        (Fraction(3, 1),)
        >>> s.coordinates((0, 0, 1)) is None
        True
    """

    def __init__(self, field, n, vectors=()):
        vectors = [field.vector(v) for v in vectors]

        if any(len(v) != n for v in vectors):
            raise DimensionMismatch("Vectors must have length %i" % n)

        rows, pivots = _reduce_rows(field, vectors, n)
        self.field = field
        self.n = n
        self.basis = tuple(tuple(r) for r in rows[:len(pivots)])
        self.pivots = tuple(pivots)

    @classmethod
    def whole(cls, field, n):
        return cls(field, n, Matrix.identity(field, n).row_list())

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, vector):
        """The canonical representative of `vector` modulo this subspace
        (all pivot entries zeroed)."""
        reduced = list(vector)

        for row, p in zip(self.basis, self.pivots):
            c = reduced[p]

            if c != 0:
                reduced = [a - c * b for a, b in zip(reduced, row)]

        return tuple(reduced)

    def __contains__(self, vector):
        return is_zero(self.reduce(vector))

    contains = __contains__

    def coordinates(self, vector):
        """Coordinates of `vector` in the canonical basis, or None"""
        vector = self.field.vector(vector)

        if vector not in self:
            return None

        return tuple(vector[p] for p in self.pivots)

    def combine(self, coords):
        vector = zero_vector(self.field, self.n)

        for c, row in zip(coords, self.basis):
            if c != 0:
                vector = vadd(vector, vscale(c, row))

        return vector

    def __add__(self, other):
        return Subspace(self.field, self.n, self.basis + other.basis)

    def intersect(self, other):
        return Subspace(self.field, self.n, intersect_spans(self.basis, other.basis))

    def issubset(self, other):
        return all(v in other for v in self.basis)

    def complement_basis(self):
        return complement_basis(self.field, self.basis, self.n)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.n, self.basis))

    def __repr__(self):
        return "<Subspace dim %i of %s^%i>" % (self.dim, self.field, self.n)


def span_basis(field, vectors, n):
    """The canonical basis of the span of `vectors` in K^n

    Examples:
        >>> span_basis(QQ, [(2, 4), (1, 2)], 2)
        ((Fraction(1, 1), Fraction(2, 1)),)
    """
    return Subspace(field, n, vectors).basis


def in_span(field, vectors, vector):
    return vector in Subspace(field, len(vector), vectors)


def coordinates(field, basis, vector):
    """Coordinates c with sum(c_i basis_i) = vector, for any basis, or None"""
    if not basis:
        return () if is_zero(vector) else None

    m = Matrix.from_columns(field, basis, rows=len(vector))
    return solve(m, vector)


def intersect_spans(a, b):
    """A spanning set of span(a) n span(b)

    Examples:
        >>> a = [(1, 0, 0), (0, 1, 0)]
        >>> b = [(0, 1, 0), (0, 0, 1)]
        >>> [[str(x) for x in v] for v in intersect_spans(a, b)]
        [['0', '1', '0']]
    """
    if not a or not b:
        return []

    field = _field_of(a[0])
    columns = list(a) + [vscale(-field.one, v) for v in b]
    m = Matrix.from_columns(field, columns, rows=len(a[0]))
    result = []

    for solution in kernel_basis(m):
        combined = zero_vector(field, len(a[0]))

        for c, v in zip(solution[:len(a)], a):
            if c != 0:
                combined = vadd(combined, vscale(c, v))

        result.append(combined)

    return span_basis(field, result, len(a[0]))


def complement_basis(field, basis, n):
    """Standard unit vectors on the non-pivot columns of span(basis)

    Examples:
        >>> [[str(x) for x in v] for v in complement_basis(QQ, [(1, 1)], 2)]
        [['0', '1']]
    """
    pivots = set(Subspace(field, n, basis).pivots)
    return [unit_vector(field, n, j) for j in range(n) if j not in pivots]


def _field_of(vector):
    sample = next(iter(vector), None)

    if isinstance(sample, Residue):
        return GF(sample.modulus)

    return QQ
