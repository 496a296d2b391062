# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross
~~~~~~

Exact partial crossed products of finite-dimensional algebras

Examples:
    basic usage::

        >>> from pcross import fixtures, crossed
        >>> action = fixtures.z_transfer()
        >>> crossed.build_crossed(action).dim
        4

    analyze an algebra::

        >>> from pcross import algebras, linalg
        >>> a = algebras.upper_triangular(linalg.QQ, 2)
        >>> len(algebras.jacobson_radical(a))
        1
        >>> algebras.frobenius_form(a) is None
        True
"""

__version__ = "0.3.0"

__all__ = ["linalg", "groups", "algebras", "actions", "crossed", "lab"]

__title__ = "pcross"
__author__ = "Reuben Cummings"
__description__ = "Exact partial crossed products of finite-dimensional algebras"
__email__ = "reubano@gmail.com"
__license__ = "MIT"
__copyright__ = "Copyright 2026 Reuben Cummings"

from . import (
    utils,
    linalg,
    groups,
    algebras,
    actions,
    crossed,
    globalization,
    triangular,
    formatters,
    fixtures,
    formats,
    lab,
)
