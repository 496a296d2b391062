#!/usr/bin/env python
# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

""" Exact partial crossed products from the command line """

import sys

from os import environ
from argparse import RawTextHelpFormatter, ArgumentParser

import pygogo as gogo

import pcross

from pcross import algebras, formats, groups
from pcross.actions import fixed_ring, is_finite_type, validate_action
from pcross.actions import validate_global
from pcross.crossed import build_crossed
from pcross.formatters import summary_formatter
from pcross.globalization import EnvelopingPair, globalize, verify_enveloping
from pcross.lab import SUITES, LabConfig, run_suite
from pcross.linalg import Subspace
from pcross.triangular import extract_component_actions, triangular_crossed_iso
from pcross.triangular import validate_bimodule, validate_relative
from pcross.utils import (
    InfiniteGroup,
    MalformedInput,
    ParseError,
    PcrossError,
    StructuredAdapter,
    TwistedInput,
    set_verbosity,
)

OK, FAILED, USAGE, PARSE = 0, 1, 2, 3
ANALYSES = ("radical", "center", "frobenius", "symmetric", "fixed_ring")
SUITE_NAMES = tuple(sorted(SUITES))

parser = ArgumentParser(
    description="description: Exact partial crossed products of algebras",
    prog="pcross",
    usage="%(prog)s [options] <command> [<args>]",
    formatter_class=RawTextHelpFormatter,
)

parser.add_argument(
    "-v", "--version", help="Show version and exit.", action="store_true", default=False
)

parser.add_argument(
    "-V",
    "--verbose",
    help="Increase output verbosity.",
    action="store_true",
    default=False,
)

parser.add_argument(
    "--lenient",
    help="Warn about unknown fields in instance files instead of failing.\n\n",
    action="store_true",
    default=False,
)

subparsers = parser.add_subparsers(dest="command", metavar="<command>")

validate_parser = subparsers.add_parser(
    "validate", help="Validate an instance file against every axiom.\n\n"
)
validate_parser.add_argument(dest="path", help="The instance file.")

build_parser = subparsers.add_parser(
    "build", help="Build the crossed product of a finitely supported action.\n\n"
)
build_parser.add_argument(dest="path", help="The instance file.")
build_parser.add_argument(
    "-o", "--output", help="Write the crossed product as an instance file."
)

analyze_parser = subparsers.add_parser(
    "analyze",
    help=(
        "Radical, center, Frobenius and symmetric forms and the fixed ring\n"
        "(default: every analysis that applies).\n\n"
    ),
)
analyze_parser.add_argument(dest="path", help="The instance file.")

for analysis in ANALYSES:
    flag = "--%s" % analysis.replace("_", "-")
    analyze_parser.add_argument(
        flag, dest=analysis, action="store_true", help="Run the %s analysis." % flag[2:]
    )

analyze_parser.add_argument(
    "-c",
    "--crossed",
    action="store_true",
    help="Analyze the crossed product instead of the algebra.",
)

globalize_parser = subparsers.add_parser(
    "globalize",
    help=(
        "Construct the enveloping action (finite groups, untwisted) and\n"
        "verify any global action the file supplies.\n\n"
    ),
)
globalize_parser.add_argument(dest="path", help="The instance file.")
globalize_parser.add_argument(
    "-o", "--output", help="Write the enveloping action as an instance file."
)

triangular_parser = subparsers.add_parser(
    "triangular",
    help="Validate, split and check a triangular instance.\n\n",
)
triangular_parser.add_argument(dest="path", help="The instance file.")

lab_parser = subparsers.add_parser(
    "lab",
    help="Run a verification suite and stream findings as json lines.\n\n",
)
lab_parser.add_argument(
    dest="suite",
    choices=SUITE_NAMES,
    metavar="SUITE",
    help="The suite. Must be one of: %s.\n\n" % ", ".join(SUITE_NAMES),
)
lab_parser.add_argument(
    "-s",
    "--seed",
    type=int,
    help="The run seed (default: $PCROSS_SEED or 0).",
)
lab_parser.add_argument(
    "-t", "--trials", type=int, default=10, help="Number of trials (default: 10)."
)
lab_parser.add_argument(
    "-d", "--max-dim", type=int, default=4, help="Bound on dim R (default: 4)."
)
lab_parser.add_argument(
    "-g", "--max-order", type=int, default=4, help="Bound on |G| (default: 4)."
)
lab_parser.add_argument(
    "-f", "--field", default="Q", help="The base field, Q or GF(p) (default: Q)."
)
lab_parser.add_argument(
    "-w",
    "--workers",
    type=int,
    help="Worker processes (default: $PCROSS_WORKERS or 1).",
)


def _from_env(name, default):
    value = environ.get(name)

    if value in {None, ""}:
        return default

    try:
        return int(value)
    except ValueError:
        raise MalformedInput("$%s must be an integer, got %r" % (name, value))


def _emit(logger, report):
    for line in report.lines():
        logger.info(line)

    return report.passed


def _list(logger, title, algebra, basis):
    logger.info("%s: dimension %i", title, len(basis))

    for v in basis:
        logger.info("  %s", algebra.fmt(v))


def _reports(instance):
    """The validators that apply to an instance. The actions are only
    checked once the algebra, bimodule and group pass."""
    reports = [algebras.validate_algebra(instance.algebra)]
    group = instance.group

    if instance.triangular:
        reports.append(validate_bimodule(instance.triangular.bimodule))

    if group is not None and group.is_finite:
        reports.append(groups.validate_group(group))

    if instance.global_action and all(r.passed for r in reports):
        reports.append(validate_global(instance.global_action))

    if instance.action and all(r.passed for r in reports):
        reports.append(validate_action(instance.action))

    return reports


def validate(instance, logger):
    """Runs every validator that applies to an instance"""
    reports = _reports(instance)
    results = [_emit(logger, report) for report in reports]

    if instance.action and reports[-1].name == "action":
        finite, witness = is_finite_type(instance.action)
        logger.info("finite type: %s", "yes" if finite else "no")

        if not finite:
            logger.info("  witness: g = %s", witness["g"])

    return OK if all(results) else FAILED


def build(instance, logger, output=None):
    """Validates the instance, then builds the crossed product and reports
    dimension, unit and support"""
    action = _require_action(instance)
    failed = [report for report in _reports(instance) if not report.passed]

    if failed:
        for report in failed:
            _emit(logger, report)

        return FAILED

    cp = build_crossed(action)
    a = cp.as_algebra
    label = action.group.label
    logger.info("dimension: %i", cp.dim)
    logger.info("unit: %s", a.fmt(a.unit))
    logger.info("support: %s", ", ".join(label(g) for g in action.support))

    if output:
        name = "%s crossed product" % (instance.name or "instance")
        formats.dump(formats.instance_doc(a, name=name), output)
        logger.info("wrote %s", output)

    return OK


def _form_text(a, form):
    if form is None:
        return "none"

    trace = Subspace(a.field, a.dim, [algebras.trace_vector(a)])
    coords = ", ".join(str(c) for c in form.coords)
    text = "(%s) via %s" % (coords, form.method)
    return "trace form %s" % text if trace.dim and form.coords in trace else text


def analyze(instance, logger, chosen, crossed=False):
    """Runs the chosen analyses on R (or the crossed product)"""
    action = instance.action

    if crossed:
        a = build_crossed(_require_action(instance)).as_algebra
    else:
        a = instance.algebra

    chosen = chosen or [c for c in ANALYSES if c != "fixed_ring" or action]
    logger.info("algebra: dimension %i over %s", a.dim, a.field)

    if "radical" in chosen:
        _list(logger, "radical", a, algebras.jacobson_radical(a))

    if "center" in chosen:
        _list(logger, "center", a, algebras.center(a))

    for kind in ("frobenius", "symmetric"):
        if kind in chosen:
            search = algebras.find_form(a, symmetric=kind == "symmetric")
            logger.info("%s: %s", kind, _form_text(a, search.form))

            if not search.exact:
                logger.info("  miss probability <= %s", search.error_bound)

    if "fixed_ring" in chosen:
        fixed = fixed_ring(_require_action(instance))
        _list(logger, "fixed ring", instance.algebra, fixed)

    return OK


def globalize_cmd(instance, logger, output=None):
    """Constructs and verifies enveloping actions"""
    action = _require_action(instance)
    results = []

    try:
        pair = globalize(action)
    except (InfiniteGroup, TwistedInput) as err:
        logger.info("construction skipped: %s", err)
        pair = None
    else:
        logger.info("enveloping algebra: dimension %i", pair.enveloping.algebra.dim)
        results.append(_emit(logger, verify_enveloping(pair)))

        if output:
            t, b = pair.enveloping.algebra, pair.enveloping
            doc = formats.instance_doc(t, action.group, global_action=b)
            formats.dump(doc, output)
            logger.info("wrote %s", output)

    embedding = getattr(action, "embedding", None)

    if instance.global_action and embedding is not None:
        logger.info("supplied global action:")
        supplied = EnvelopingPair(action, instance.global_action, embedding)
        results.append(_emit(logger, verify_enveloping(supplied)))

    if not results:
        raise MalformedInput("Nothing to globalize: no construction or global action")

    return OK if all(results) else FAILED


def triangular_cmd(instance, logger):
    """Validates a triangular instance, splits its action and checks the
    crossed product against the triangular one"""
    L = instance.triangular

    if L is None:
        raise MalformedInput("The instance has no triangular block")

    results = [_emit(logger, validate_bimodule(L.bimodule))]

    if not (results[0] and instance.action):
        return OK if results[0] else FAILED

    action = instance.action
    results.append(_emit(logger, validate_action(action)))
    relative = extract_component_actions(L, action)
    results.append(_emit(logger, validate_relative(relative)))
    results.append(_emit(logger, triangular_crossed_iso(L, action)))
    return OK if all(results) else FAILED


def lab(args, logger):
    """Streams the findings of a suite, then a summary"""
    kwargs = {
        "seed": args.seed if args.seed is not None else _from_env("PCROSS_SEED", 0),
        "trials": args.trials,
        "max_dim": args.max_dim,
        "max_order": args.max_order,
        "field": args.field,
        "workers": args.workers or _from_env("PCROSS_WORKERS", 1),
    }
    cfg = LabConfig(args.suite, **kwargs)
    findings = run_suite(cfg)
    going = gogo.Gogo("pcross.findings", low_level="info", monolog=True)
    stream = StructuredAdapter(going.logger, {})

    for finding in findings:
        stream.info("finding", extra=finding.to_dict())

    kwargs = {"low_level": "info", "low_formatter": summary_formatter, "monolog": True}
    summary = gogo.Gogo("pcross.summary", **kwargs).logger
    summary.info("summary", extra={"findings": findings})
    return FAILED if any(f.refuted for f in findings) else OK


def _require_action(instance):
    if instance.action is None:
        raise MalformedInput("The instance has no action")

    return instance.action


def execute(argv=None):
    """Runs a command and returns its exit code

    Exit codes: 0 success, 1 validation or claim failure, 2 usage and 3
    parse errors.
    """
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return err.code

    set_verbosity(args.verbose)
    logger = gogo.Gogo(__name__, verbose=args.verbose, monolog=True).logger

    if args.version:
        logger.info("pcross v%s" % pcross.__version__)
        return OK

    if not args.command:
        parser.print_usage(sys.stderr)
        return USAGE

    try:
        if args.command == "lab":
            try:
                return lab(args, logger)
            except MalformedInput as err:
                logger.error(str(err))
                return USAGE

        instance = formats.load(args.path, strict=not args.lenient)

        if args.command == "validate":
            return validate(instance, logger)
        elif args.command == "build":
            return build(instance, logger, args.output)
        elif args.command == "analyze":
            chosen = [a for a in ANALYSES if getattr(args, a)]
            return analyze(instance, logger, chosen, args.crossed)
        elif args.command == "globalize":
            return globalize_cmd(instance, logger, args.output)
        else:
            return triangular_cmd(instance, logger)
    except ParseError as err:
        logger.error("parse error: %s", err)
        return PARSE
    except OSError as err:
        logger.error(str(err))
        return PARSE
    except PcrossError as err:
        logger.error(str(err))
        return FAILED


def run():
    """CLI runner"""
    sys.exit(execute())


if __name__ == "__main__":
    run()
