# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.fixtures
~~~~~~~~~~~~~~~

Small concrete instances: partial actions of the integers with finite
support, restrictions of global shift actions, a twisted C2 action, the
characteristic two control and triangular instances

Examples:
    basic usage::

        >>> sorted(NAMED)[:4]
        ['c2-swap', 'c3-restriction', 'dual-numbers', 'gf2-c2']
        >>> named("z-on-field").support
        [0]
"""

from . import algebras
from .actions import GlobalAction, TwistedPartialAction, global_as_partial
from .actions import restrict_global
from .globalization import EnvelopingPair
from .groups import integers, make_cyclic
from .linalg import GF, QQ, Matrix, unit_vector
from .triangular import assemble_triangular, regular_bimodule, zero_bimodule
from .utils import MalformedInput


def z_transfer(sign=1):
    """A partial action of Z on Q x Q with D_1 = Q e2, D_-1 = Q e1 and
    alpha_1(e1) = sign e2

    Only `sign=1` gives a valid action; other signs break multiplicativity.

    Examples:
        >>> action = z_transfer()
        >>> [action.ideal(g).dim for g in action.support]
        [1, 2, 1]
    """
    r = algebras.product_of_fields(QQ, 2)
    idempotents = {0: (1, 1), 1: (0, 1), -1: (1, 0)}
    maps = {1: [[0, 0], [sign, 0]], -1: [[0, 1], [0, 0]]}
    return TwistedPartialAction(r, integers(), idempotents, maps)


def z_on_field():
    """Z acting on Q with D_0 = Q and every other D_n = 0"""
    return TwistedPartialAction(algebras.field_algebra(QQ), integers(), {0: (1,)})


def cyclic_shift(n, field=QQ):
    """C_n shifting the coordinates of K^n: beta_g(e_i) = e_{i+g}"""
    t, group = algebras.product_of_fields(field, n), make_cyclic(n)
    maps = {}

    for g in group.elements:
        columns = [unit_vector(field, n, (i + g) % n) for i in range(n)]
        maps[g] = Matrix.from_columns(field, columns, rows=n)

    return GlobalAction(t, group, maps)


def c3_restriction():
    """The C3 shift restricted to the first two coordinates"""
    return restrict_global(cyclic_shift(3), (1, 1, 0))


def truncated_shift(k):
    """The shift of Z on Q^(2k+1) (basis e-k..ek) with the ends cut off

    beta_1 kills ek and beta_-1 kills e-k, so neither is an automorphism.
    """
    n = 2 * k + 1
    names = ["e%i" % i for i in range(-k, k + 1)]
    t = algebras.product_of_fields(QQ, n)
    t = algebras.StructureAlgebra(QQ, n, t.consts, t.unit, names)
    zero = (0,) * n
    up = [unit_vector(QQ, n, j + 1) if j < n - 1 else zero for j in range(n)]
    down = [unit_vector(QQ, n, j - 1) if j else zero for j in range(n)]
    maps = {
        1: Matrix.from_columns(QQ, up, rows=n),
        -1: Matrix.from_columns(QQ, down, rows=n),
    }
    return GlobalAction(t, integers(), maps)


def truncated_restriction(window=2):
    """The truncated shift restricted to Q e0, computed on -window..window"""
    shift = truncated_shift(window)
    idem = unit_vector(QQ, 2 * window + 1, window)
    return restrict_global(shift, idem, window=window)


def truncated_pair(window=2):
    """The restriction of the truncated shift paired with the shift itself"""
    action = truncated_restriction(window)
    return EnvelopingPair(action, action.source, action.embedding)


def swap(field=QQ):
    """C2 swapping the factors of K x K"""
    t = algebras.product_of_fields(field, 2)
    flip = Matrix.from_rows(field, [[0, 1], [1, 0]])
    return GlobalAction(t, make_cyclic(2), {1: flip})


def c2_swap(field=QQ):
    """The swap as a (global) partial action"""
    return global_as_partial(swap(field))


def c2_on_field():
    """C2 on Q with D_g = 0"""
    return TwistedPartialAction(algebras.field_algebra(QQ), make_cyclic(2), {})


def trivial_action(algebra, group):
    """D_g = R and alpha_g = id for every g of a finite group

    Examples:
        >>> trivial_action(algebras.dual_numbers(QQ), make_cyclic(2)).support
        [0, 1]
    """
    identity = Matrix.identity(algebra.field, algebra.dim)
    idempotents = {g: algebra.unit for g in group.elements}
    maps = {g: identity for g in group.elements}
    return TwistedPartialAction(algebra, group, idempotents, maps)


def twisted_c2():
    """C2 swapping e1 and e2 in Q^3 with the central twist u_{g,g} = (2, 2, 5)"""
    t = algebras.product_of_fields(QQ, 3)
    flip = Matrix.from_rows(QQ, [[0, 1, 0], [1, 0, 0], [0, 0, 1]])
    return GlobalAction(t, make_cyclic(2), {1: flip}, twist={(1, 1): (2, 2, 5)})


def twisted_c2_partial():
    """The twisted C2 action restricted to e1 + e3 (D_g = Q e3, w_{g,g} = 5 e3)

    Examples:
        >>> twisted_c2_partial().is_twisted
        True
    """
    return restrict_global(twisted_c2(), (1, 0, 1))


def gf2_c2():
    """The trivial action of C2 on GF(2); its crossed product is GF(2)[C2]"""
    return trivial_action(algebras.field_algebra(GF(2)), make_cyclic(2))


def dual_trivial_c2():
    return trivial_action(algebras.dual_numbers(QQ), make_cyclic(2))


def sign_on_bimodule():
    """C2 on (Q, Q, Q) acting by -1 on the bimodule and trivially on R and S

    Returns:
        Tuple[TriangularAlgebra, TwistedPartialAction]
    """
    k = algebras.field_algebra(QQ)
    L = assemble_triangular(k, regular_bimodule(k), k)
    sign = Matrix.from_rows(QQ, [[1, 0, 0], [0, -1, 0], [0, 0, 1]])
    idempotents = {g: L.algebra.unit for g in (0, 1)}
    action = TwistedPartialAction(L.algebra, make_cyclic(2), idempotents, {1: sign})
    return L, action


def corner_swap():
    """C2 swapping the corners of (Q, 0, Q), which no component action allows"""
    k = algebras.field_algebra(QQ)
    L = assemble_triangular(k, zero_bimodule(k, k), k)
    flip = Matrix.from_rows(QQ, [[0, 1], [1, 0]])
    idempotents = {g: L.algebra.unit for g in (0, 1)}
    action = TwistedPartialAction(L.algebra, make_cyclic(2), idempotents, {1: flip})
    return L, action


ALGEBRAS = {
    "field": lambda: algebras.field_algebra(QQ),
    "dual-numbers": lambda: algebras.dual_numbers(QQ),
    "upper-triangular": lambda: algebras.upper_triangular(QQ, 2),
    "m2": lambda: algebras.matrix_algebra(QQ, 2),
}

NAMED = {
    "z-transfer": z_transfer,
    "z-on-field": z_on_field,
    "truncated-restriction": truncated_restriction,
    "c2-swap": c2_swap,
    "c3-restriction": c3_restriction,
    "twisted-c2": twisted_c2_partial,
    "gf2-c2": gf2_c2,
    "dual-numbers": dual_trivial_c2,
}


def named(name):
    """A named partial action

    Raises:
        MalformedInput: unknown name
    """
    try:
        return NAMED[name]()
    except KeyError:
        known = ", ".join(sorted(NAMED))
        raise MalformedInput("Unknown fixture %s. Use one of %s" % (name, known))
