# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.groups
~~~~~~~~~~~~~

Group models: finite groups given by a multiplication table and the infinite
cyclic group of the integers under addition

Examples:
    basic usage::

        >>> c6 = make_cyclic(6)
        >>> [c6.label(x) for x in subgroup_closure(c6, [2])]
        ['e', 'g^2', 'g^4']
        >>> validate_group(make_symmetric(3)).passed
        True
        >>> z = integers()
        >>> z.mul(3, -5), z.inv(4)
        (-2, -4)
"""

from itertools import permutations, product

from .utils import Report, MalformedInput, InfiniteGroup, NotASubgroup, get_logger

logger = get_logger(__name__)

FINITE = "FiniteTable"
INTEGERS = "IntegerGroup"


class GroupModel(object):
    """A finite group by multiplication table, or the integers

    Finite elements are the table indices `0..n-1`; integer group elements are
    python ints.

    Args:
        table (Sequence[Sequence[int]]): The n x n multiplication table
            (`table[g][h]` is the index of gh). Omit for the integers.

        identity (int): Index of the identity (default: detected from the
            table, falling back to 0).

        labels (Sequence[str]): Element names (default: `x0`, `x1`, ...).

    Examples:
        >>> c3 = make_cyclic(3)
        >>> c3.order, c3.e, c3.mul(2, 2), c3.label(c3.inv(1))
        (3, 0, 1, 'g^2')
        >>> GroupModel([[0, 1], [1, 0]]).labels
        ('x0', 'x1')
    """

    def __init__(self, table=None, identity=None, labels=None):
        if table is None:
            self.kind = INTEGERS
            self.table = None
            self.identity = 0
            self.labels = None
            self._inverses = None
            return

        self.kind = FINITE
        self.table = tuple(tuple(row) for row in table)
        n = len(self.table)

        if identity is None:
            identity = next(
                (
                    e
                    for e in range(n)
                    if len(self.table[e]) == n
                    and all(self.table[e][x] == x for x in range(n))
                ),
                0,
            )

        self.identity = identity
        self.labels = tuple(labels) if labels else tuple("x%i" % i for i in range(n))

        if len(self.labels) != n:
            msg = "Got %i labels for %i elements"
            raise MalformedInput(msg % (len(self.labels), n))

        self._inverses = tuple(
            next((y for y in range(n) if self._safe_mul(x, y) == identity), None)
            for x in range(n)
        )

    def _safe_mul(self, g, h):
        try:
            return self.table[g][h]
        except IndexError:
            return None

    @property
    def is_finite(self):
        return self.kind == FINITE

    @property
    def order(self):
        """The number of elements (None for the integers)"""
        return len(self.table) if self.is_finite else None

    @property
    def e(self):
        return self.identity

    @property
    def elements(self):
        if not self.is_finite:
            raise InfiniteGroup("The integers have no finite element list")

        return tuple(range(len(self.table)))

    def mul(self, g, h):
        return self.table[g][h] if self.is_finite else g + h

    def inv(self, g):
        if self.is_finite:
            inverse = self._inverses[g]

            if inverse is None:
                raise MalformedInput("%s has no inverse" % self.label(g))

            return inverse

        return -g

    def power(self, g, k):
        """g^k for an integer k

        Examples:
            >>> make_cyclic(5).power(2, 3)
            1
            >>> integers().power(2, -3)
            -6
        """
        if not self.is_finite:
            return g * k

        base = g if k >= 0 else self.inv(g)
        result = self.e

        for _ in range(abs(k)):
            result = self.mul(result, base)

        return result

    def element_order(self, g):
        """The order of g (0 for nonzero integers)"""
        if not self.is_finite:
            return 1 if g == 0 else 0

        result, k = g, 1

        while result != self.e:
            result = self.mul(result, g)
            k += 1

        return k

    def label(self, g):
        return self.labels[g] if self.is_finite else str(g)

    def element(self, label):
        """Looks up an element by label (or index / integer)

        Examples:
            >>> make_cyclic(3).element("g^2")
            2
            >>> integers().element("-4")
            -4
        """
        if not self.is_finite:
            try:
                return int(label)
            except (TypeError, ValueError):
                raise MalformedInput("Not an integer: %r" % (label,))

        if isinstance(label, int) and 0 <= label < len(self.table):
            return label
        elif label in self.labels:
            return self.labels.index(label)
        else:
            raise MalformedInput("Unknown group element %r" % (label,))

    def sort(self, elements):
        """Canonical order: table index or integer order"""
        return sorted(set(elements))

    def __eq__(self, other):
        return (
            isinstance(other, GroupModel)
            and self.kind == other.kind
            and self.table == other.table
            and self.identity == other.identity
        )

    def __hash__(self):
        return hash((self.kind, self.table, self.identity))

    def __repr__(self):
        if self.is_finite:
            return "<GroupModel of order %i>" % self.order

        return "<GroupModel Z>"


def from_table(table, identity=None, labels=None):
    return GroupModel(table, identity=identity, labels=labels)


def integers():
    return GroupModel()


def make_cyclic(n):
    """The cyclic group of order n with generator `g`

    Examples:
        >>> make_cyclic(2).table
        ((0, 1), (1, 0))
        >>> make_cyclic(1).labels
        ('e',)
        >>> make_cyclic(0)
        Traceback (most recent call last):
        pcross.utils.MalformedInput: Cyclic group order must be >= 1, got 0
    """
    if not isinstance(n, int) or n < 1:
        raise MalformedInput("Cyclic group order must be >= 1, got %s" % n)

    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    labels = ["e", "g"] + ["g^%i" % i for i in range(2, n)]
    return GroupModel(table, identity=0, labels=labels[:n])


def _cycle_label(perm):
    seen, cycles = set(), []

    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue

        cycle, x = [], start

        while x not in seen:
            seen.add(x)
            cycle.append(str(x + 1))
            x = perm[x]

        cycles.append("(%s)" % " ".join(cycle))

    return "".join(cycles) or "e"


def make_symmetric(n):
    """The symmetric group on n <= 4 points, composition right to left

    Examples:
        >>> s3 = make_symmetric(3)
        >>> s3.order, s3.labels[:3]
        (6, ('e', '(2 3)', '(1 2)'))
    """
    if not isinstance(n, int) or not 1 <= n <= 4:
        raise MalformedInput("Symmetric groups are supported for 1 <= n <= 4")

    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(p[q[i]] for i in range(n))] for q in perms] for p in perms]
    return GroupModel(table, identity=0, labels=[_cycle_label(p) for p in perms])


def direct_product(a, b):
    """The direct product of two finite groups; (x, y) has index x * |b| + y

    Examples:
        >>> klein = direct_product(make_cyclic(2), make_cyclic(2))
        >>> klein.order, klein.label(3)
        (4, '(g,g)')
        >>> validate_group(klein).passed
        True
    """
    if not (a.is_finite and b.is_finite):
        raise InfiniteGroup("Direct products are supported for finite groups only")

    nb = b.order
    pairs = list(product(range(a.order), range(nb)))
    table = [
        [a.mul(x1, x2) * nb + b.mul(y1, y2) for x2, y2 in pairs] for x1, y1 in pairs
    ]
    labels = ["(%s,%s)" % (a.label(x), b.label(y)) for x, y in pairs]
    return GroupModel(table, identity=a.e * nb + b.e, labels=labels)


def validate_group(group):
    """Checks the Latin square property, identity, inverses and associativity

    Returns:
        Report: failures carry a witness (e.g. the non-associative triple)

    Examples:
        >>> table = [list(r) for r in make_cyclic(4).table]
        >>> table[1][1], table[1][2] = table[1][2], table[1][1]
        >>> report = validate_group(GroupModel(table, identity=0))
        >>> report.passed
        False
        >>> "associativity" in report.axioms
        True
        >>> validate_group(integers()).passed
        True
    """
    report = Report("group")

    if not group.is_finite:
        report.note("integers under addition")
        return report

    table, n = group.table, group.order

    if any(len(row) != n for row in table):
        report.fail("shape", "multiplication table is not square")
        return report

    if any(not 0 <= x < n for row in table for x in row):
        report.fail("range", "table entries must be element indices 0..%i" % (n - 1))
        return report

    for g in range(n):
        if len(set(table[g])) != n:
            report.fail("latin", "row %s repeats an element" % group.label(g), row=g)
            break

    for h in range(n):
        if len({table[g][h] for g in range(n)}) != n:
            msg = "column %s repeats an element" % group.label(h)
            report.fail("latin", msg, column=h)
            break

    e = group.e
    is_identity = 0 <= e < n and all(
        table[e][x] == x and table[x][e] == x for x in range(n)
    )

    if not is_identity:
        report.fail("identity", "%s is not a two-sided identity" % e, identity=e)
    else:
        for g in range(n):
            inverse = group._inverses[g]

            if inverse is None or table[inverse][g] != e:
                msg = "%s has no two-sided inverse" % group.label(g)
                report.fail("inverses", msg, element=g)
                break

    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            labels = [group.label(x) for x in (a, b, c)]
            msg = "(%s %s) %s != %s (%s %s)" % tuple(labels + labels)
            report.fail("associativity", msg, triple=(a, b, c))
            break

    return report


def subgroup_closure(group, gens):
    """The subgroup generated by `gens`, as a sorted element list

    Examples:
        >>> subgroup_closure(make_cyclic(5), [])
        [0]
        >>> subgroup_closure(make_cyclic(2), [1])
        [0, 1]
    """
    if not group.is_finite:
        msg = "Subgroups of the integers are dZ; pass d to the caller instead"
        raise InfiniteGroup(msg)

    elements = {group.e} | {group.element(g) for g in gens}
    frontier = set(elements)

    while frontier:
        new = {group.mul(a, b) for a in frontier for b in elements}
        new |= {group.mul(b, a) for a in frontier for b in elements}
        frontier = new - elements
        elements |= frontier

    return sorted(elements)


def is_subgroup(group, elements):
    """Whether a finite element list is closed under products and inverses

    Examples:
        >>> is_subgroup(make_cyclic(4), [0, 2])
        True
        >>> is_subgroup(make_cyclic(4), [0, 1])
        False
    """
    elements = set(elements)

    if group.e not in elements:
        return False

    if not group.is_finite:
        return elements == {0}

    closed = all(group.mul(a, b) in elements for a in elements for b in elements)
    return closed and all(group.inv(a) in elements for a in elements)


def check_subgroup(group, elements):
    if not is_subgroup(group, elements):
        labels = [group.label(x) for x in sorted(elements)]
        msg = "{%s} is not a subgroup" % ", ".join(labels)
        raise NotASubgroup(msg, witness={"elements": sorted(elements)})

    return sorted(elements)


def subgroups(group):
    """Every subgroup of a finite group, ordered by size then elements

    Examples:
        >>> [len(h) for h in subgroups(make_cyclic(4))]
        [1, 2, 4]
        >>> len(subgroups(make_symmetric(3)))
        6
    """
    found = {tuple(subgroup_closure(group, [g])) for g in group.elements}
    frontier = set(found)

    while frontier:
        joins = {
            tuple(subgroup_closure(group, set(a) | set(b)))
            for a in frontier
            for b in found
        }
        frontier = joins - found
        found |= frontier

    return sorted((list(h) for h in found), key=lambda h: (len(h), h))


def left_cosets(group, subgroup):
    """The left cosets gH, each sorted, in order of their least element

    Examples:
        >>> left_cosets(make_cyclic(4), [0, 2])
        [[0, 2], [1, 3]]
    """
    cosets, seen = [], set()

    for g in group.elements:
        if g not in seen:
            coset = sorted({group.mul(g, h) for h in subgroup})
            seen.update(coset)
            cosets.append(coset)

    return cosets
