# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
pcross.lab
~~~~~~~~~~

Seeded verification campaigns. Each suite checks one structural claim about
crossed products on fixed instances first, then on random instances built by
restricting a random global action to a random central idempotent.

Verdicts: `confirmed`, `refuted` (with a replayable seed and trial),
`degenerate` (the instance cannot exercise the claim) and `expected` (a
control whose hypothesis fails on purpose, e.g. char K dividing |G|, or the
literal 1/|G| average on a strictly partial action).

"Artinian" is read as "finite dimensional over K", the decidable surrogate
for the algebras represented here.

Examples:
    basic usage::

        >>> findings = run_suite(LabConfig("artinian", trials=1))
        >>> findings[0].verdict, findings[0].witness["dim"]
        ('confirmed', 4)
        >>> LabConfig("perfect")
        Traceback (most recent call last):
        pcross.utils.UnknownSuite: Unknown suite perfect. Use one of artinian, \
fixedring, frobenius, globalization, maschke, noetherian, quotient, \
semisimple, subgroup, symmetric, triangular
"""

import hashlib
import random

from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor
from itertools import repeat

from . import algebras, fixtures, formats, groups
from .actions import (
    GlobalAction,
    align_actions,
    fixed_ring,
    global_as_partial,
    is_finite_type,
    is_invariant,
    restrict_global,
)
from .crossed import (
    build_crossed,
    induced_form,
    maschke_average,
    maschke_check,
    quotient_isomorphism,
    regular_representation,
    subgroup_decomposition,
    delta,
)
from .globalization import EnvelopingPair, function_algebra, globalize
from .globalization import verify_enveloping
from .linalg import QQ, FieldSpec, Matrix, Subspace, kernel_basis, solve
from .linalg import unit_vector
from .triangular import diagonal_extension, extract_component_actions
from .triangular import triangular_crossed_iso, validate_relative
from .utils import (
    HypothesisViolation,
    InfiniteGroup,
    MalformedInput,
    PcrossError,
    Report,
    TwistedInput,
    UnknownSuite,
    UnsupportedField,
    get_logger,
)

logger = get_logger(__name__)

MAX_DIM = 6
MAX_ORDER = 8
UNDECIDED = (UnsupportedField, TwistedInput, InfiniteGroup)

Bounds = namedtuple("Bounds", ["max_dim", "max_order"])


class LabConfig(object):
    """Settings for one lab run

    Args:
        suite (str): The suite name.
        seed (int): The 64 bit run seed (default: 0).
        trials (int): Number of trials (default: 10).
        max_dim (int): Bound on dim R, at most 6 (default: 4).
        max_order (int): Bound on |G|, at most 8 (default: 4).
        field (str or FieldSpec): The base field (default: Q).
        workers (int): Worker processes (default: 1).

    Raises:
        UnknownSuite: the suite does not exist
        MalformedInput: a bound is out of range

    Examples:
        >>> LabConfig("maschke", max_dim=7)
        Traceback (most recent call last):
        pcross.utils.MalformedInput: max_dim must be between 1 and 6, got 7
    """

    def __init__(self, suite, seed=0, trials=10, max_dim=4, max_order=4, **kwargs):
        if suite not in SUITES:
            msg = "Unknown suite %s. Use one of %s" % (suite, ", ".join(sorted(SUITES)))
            raise UnknownSuite(msg, witness={"suite": suite})

        field = kwargs.get("field", QQ)
        limits = [
            ("trials", trials, 1, None),
            ("max_dim", max_dim, 1, MAX_DIM),
            ("max_order", max_order, 1, MAX_ORDER),
            ("workers", kwargs.get("workers", 1), 1, None),
        ]

        for name, value, low, high in limits:
            if not isinstance(value, int) or value < low or (high and value > high):
                if high:
                    msg = "%s must be between %i and %i, got %s"
                    msg %= (name, low, high, value)
                else:
                    msg = "%s must be at least %i, got %s" % (name, low, value)

                raise MalformedInput(msg)

        if not isinstance(seed, int) or not 0 <= seed < 2 ** 64:
            msg = "seed must be a 64 bit unsigned integer, got %s" % seed
            raise MalformedInput(msg)

        self.suite = suite
        self.seed = seed
        self.trials = trials
        self.max_dim = max_dim
        self.max_order = max_order

        if not isinstance(field, FieldSpec):
            field = FieldSpec.from_string(field)

        self.field = field
        self.workers = kwargs.get("workers", 1)

    @property
    def bounds(self):
        return Bounds(self.max_dim, self.max_order)

    def __repr__(self):
        args = (self.suite, self.seed, self.trials, self.field)
        return "<LabConfig %s seed %i, %i trials over %s>" % args


class Finding(object):
    """The outcome of one trial

    Attributes:
        suite (str): The suite.
        fingerprint (str): A digest of the serialized instance.
        claim (str): The claim checked.
        verdict (str): confirmed, refuted, degenerate or expected.
        witness (dict): The data behind the verdict.
        seed (int): The run seed.
        trial (int): The trial index; (suite, seed, trial, bounds, field)
            replays the finding.
    """

    def __init__(self, suite, fingerprint, claim, verdict, witness, seed, trial, **kw):
        self.suite = suite
        self.fingerprint = fingerprint
        self.claim = claim
        self.verdict = verdict
        self.witness = witness
        self.seed = seed
        self.trial = trial
        self.bounds = kw.get("bounds", Bounds(4, 4))
        self.field = str(kw.get("field", QQ))

    @property
    def refuted(self):
        return self.verdict == "refuted"

    def to_dict(self):
        return {
            "suite": self.suite,
            "fingerprint": self.fingerprint,
            "claim": self.claim,
            "verdict": self.verdict,
            "witness": self.witness,
            "seed": self.seed,
            "trial": self.trial,
            "bounds": list(self.bounds),
            "field": self.field,
        }

    def __repr__(self):
        args = (self.suite, self.trial, self.verdict)
        return "<Finding %s trial %i: %s>" % args


def _groups(max_order):
    orders = range(1, max_order + 1)
    candidates = [("C%i" % n, groups.make_cyclic(n)) for n in orders]

    if max_order >= 4:
        klein = groups.direct_product(groups.make_cyclic(2), groups.make_cyclic(2))
        candidates.append(("C2xC2", klein))

    if max_order >= 6:
        candidates.append(("S3", groups.make_symmetric(3)))

    return candidates


def _blocks(field, max_dim):
    blocks = [
        algebras.field_algebra(field),
        algebras.dual_numbers(field),
        algebras.upper_triangular(field, 2),
        algebras.matrix_algebra(field, 2),
    ]
    return [b for b in blocks if b.dim <= max_dim]


def _orbits(rng, group, room):
    """Transitive G-sets G/H of total size at most `room`, as lists of cosets"""
    subgroups = groups.subgroups(group)
    orbits = []

    for _ in range(rng.randint(1, 2)):
        fitting = [h for h in subgroups if group.order // len(h) <= room]

        if not fitting:
            break

        cosets = groups.left_cosets(group, rng.choice(fitting))
        room -= len(cosets)
        orbits.append(cosets)

    return orbits


def _twist_scalars(field):
    if field.is_rational:
        return [field(c) for c in (2, 3, 5, -1, "1/2")]

    return [field(c) for c in range(1, field.p)]


def random_action(seed, bounds, field=QQ, twist=True):
    """A random valid action: a global action of a small group permuting
    copies of one block algebra (K, dual numbers, UT2 or M2), optionally
    twisted by an orbitwise scalar cocycle on C2 or C4, restricted to the
    sum of the units of a random set of copies

    Args:
        seed: Anything :class:`random.Random` accepts.
        bounds (Bounds): dim R <= max_dim and |G| <= max_order.
        field (FieldSpec): The base field.
        twist (bool): Allow twisted instances.

    Returns:
        TwistedPartialAction: with `source` (the global action) and
        `embedding` attributes

    Examples:
        >>> from pcross.actions import validate_action
        >>> action = random_action(7, Bounds(2, 2))
        >>> action.dim <= 2, action.group.order <= 2
        (True, True)
        >>> validate_action(action).passed
        True
        >>> random_action(7, Bounds(2, 2)).support == action.support
        True
    """
    rng = random.Random(seed)
    name, group = rng.choice(_groups(bounds.max_order))
    block = rng.choice(_blocks(field, bounds.max_dim))
    d = block.dim
    orbits = _orbits(rng, group, max(1, 2 * bounds.max_dim // d))
    points = [(o, tuple(c)) for o, cosets in enumerate(orbits) for c in cosets]
    place = {(o, g): k for k, (o, c) in enumerate(points) for g in c}
    t = function_algebra(block, len(points))
    maps = {}

    for g in group.elements:
        columns = []

        for o, coset in points:
            image = place[(o, group.mul(g, coset[0]))]
            columns.extend(unit_vector(field, t.dim, image * d + i) for i in range(d))

        maps[g] = Matrix.from_columns(field, columns, rows=t.dim)

    cocycle = None

    if twist and name in {"C2", "C4"} and rng.random() < 0.5:
        scalars = [rng.choice(_twist_scalars(field)) for _ in orbits]
        c = sum((tuple(scalars[o] * u for u in block.unit) for o, _ in points), ())
        n = group.order
        cocycle = {(i, j): c for i in range(1, n) for j in range(1, n) if i + j >= n}

    b = GlobalAction(t, group, maps, twist=cocycle)
    size = rng.randint(1, min(len(points), max(1, bounds.max_dim // d)))
    chosen = set(rng.sample(range(len(points)), size))
    zero = (field.zero,) * d
    idem = sum((block.unit if k in chosen else zero for k in range(len(points))), ())
    action = restrict_global(b, idem)
    logger.debug("random action of %s on dimension %i", name, action.dim)
    return action


def fingerprint(algebra, action):
    """A short digest of the serialized instance

    Examples:
        >>> action = fixtures.z_on_field()
        >>> len(fingerprint(action.algebra, action))
        12
    """
    doc = formats.instance_doc(algebra, action.group, action)
    return hashlib.md5(formats.dumps(doc).encode("utf-8")).hexdigest()[:12]


def _is_degenerate(action):
    return not action.dim or action.support == [action.group.e]


def _settle(passed, action):
    if not passed:
        return "refuted"
    elif _is_degenerate(action):
        return "degenerate"
    else:
        return "confirmed"


def _artinian(action, rng, cfg):
    cp = build_crossed(action)
    finite_type, finite_witness = is_finite_type(action)
    assoc = algebras.validate_algebra(cp.as_algebra)
    witness = {
        "dim": cp.dim,
        "group": "finite" if action.group.is_finite else "Z",
        "finite_type": finite_type,
        "finite_type_witness": finite_witness,
        "associative": assoc.passed,
    }

    if not action.group.is_finite:
        witness["surrogate"] = "artinian read as finite dimensional over K"
        return ("confirmed" if assoc.passed else "refuted"), witness

    bound = action.group.order * action.dim
    witness["bound"] = bound
    return _settle(assoc.passed and finite_type and cp.dim <= bound, action), witness


def _noetherian(action, rng, cfg):
    cp = build_crossed(action)
    dims = [action.ideal(g).dim for g in action.support]
    bound = len(action.support) * action.dim
    assoc = algebras.validate_algebra(cp.as_algebra)
    witness = {
        "dim": cp.dim,
        "ideal_dims": dims,
        "bound": bound,
        "failures": assoc.axioms[:3],
    }
    passed = cp.dim == sum(dims) <= bound and assoc.passed
    return _settle(passed, action), witness


def _semisimple(action, rng, cfg):
    group, field = action.group, action.field
    p = field.characteristic
    divides = bool(p) and group.order % p == 0
    cp = build_crossed(action)
    radical = algebras.jacobson_radical(cp.as_algebra)
    r_semisimple = algebras.is_semisimple(action.algebra)
    holds = r_semisimple == (not radical)
    witness = {
        "radical_dim": len(radical),
        "R_semisimple": r_semisimple,
        "characteristic_divides": divides,
    }

    if divides:
        return ("degenerate" if holds else "expected"), witness

    return _settle(holds, action), witness


def _r_linear_projection(rng, cp, rep, sub):
    """A random idempotent onto `sub` commuting with R d_e, or None"""
    action, field = cp.action, cp.field
    n, k = rep.dim, sub.dim
    r, e = action.algebra, action.group.e
    rows, rhs = [], []

    def unknown(a, b):
        return a * n + b

    for j, v in enumerate(sub.basis):
        for a in range(k):
            row = [field.zero] * (k * n)

            for b in range(n):
                row[unknown(a, b)] = v[b]

            rows.append(row)
            rhs.append(field.one if a == j else field.zero)

    for i in range(r.dim):
        rho = rep.matrix(cp.to_vector(delta(action, e, r.unit_vector(i))))
        images = [sub.coordinates(rho.apply(v)) for v in sub.basis]
        restricted = Matrix.from_columns(field, images, rows=k)

        for a in range(k):
            for b in range(n):
                row = [field.zero] * (k * n)

                for m in range(n):
                    row[unknown(a, m)] += rho[m, b]

                for m in range(k):
                    row[unknown(m, b)] -= restricted[a, m]

                rows.append(row)
                rhs.append(field.zero)

    system = Matrix.from_rows(field, rows, cols=k * n)
    solution = solve(system, rhs)

    if solution is None:
        return None

    for v in kernel_basis(system):
        c = field(rng.randint(-1, 1))
        solution = tuple(s + c * x for s, x in zip(solution, v))

    c_rows = [solution[a * n : (a + 1) * n] for a in range(k)]
    inclusion = Matrix.from_columns(field, sub.basis, rows=n)
    return inclusion * Matrix.from_rows(field, c_rows, cols=n)


def _maschke(action, rng, cfg):
    cp = build_crossed(action)
    alg, field = cp.as_algebra, cp.field
    rep = regular_representation(alg)
    x = tuple(field(rng.randint(-2, 2)) for _ in range(alg.dim))
    sub = Subspace(field, alg.dim, alg.right_matrix(x).columns())
    witness = {"cp_dim": cp.dim, "N_dim": sub.dim, "generator": alg.fmt(x)}

    if not sub.dim:
        return "degenerate", witness

    pi = _r_linear_projection(rng, cp, rep, sub)

    if pi is None:
        witness["reason"] = "N has no R-linear complement"
        return "degenerate", witness

    try:
        rescaled = maschke_average(action, rep, pi, "idempotent-sum", cp=cp)
    except HypothesisViolation:
        witness["idempotent_sum_formula"] = None
    else:
        rescaled_report = maschke_check(cp, rep, sub.basis, rescaled)
        witness["idempotent_sum_formula"] = rescaled_report.passed

    try:
        psi = maschke_average(action, rep, pi, cp=cp)
    except HypothesisViolation as err:
        witness["hypothesis"] = str(err)
        return "expected", witness

    report = maschke_check(cp, rep, sub.basis, psi)
    strictly = len(action.support) < action.group.order or any(
        action.ideal(g).dim < action.dim for g in action.support
    )
    witness.update({"strictly_partial": strictly, "failures": report.axioms})

    # 1/|G| scales N by z / |G|, which is 1 only when every 1_g is 1
    if not report.passed and strictly and witness["idempotent_sum_formula"]:
        return "expected", witness

    return _settle(report.passed, action), witness


def _forms(action, rng, cfg, symmetric=False):
    seed = rng.getrandbits(32)
    r_search = algebras.find_form(action.algebra, symmetric=symmetric, seed=seed)
    witness = {"R_form": r_search.to_dict()}

    if r_search.form is None:
        witness["reason"] = "R has no such form"
        return "degenerate", witness

    cp = build_crossed(action)
    search = algebras.find_form(cp.as_algebra, symmetric=symmetric, seed=seed)
    witness["crossed_form"] = search.to_dict()

    if not symmetric:
        induced = induced_form(cp, r_search.form)
        witness["induced_nondegenerate"] = induced.is_nondegenerate(cp.as_algebra)

    if search.form is None and not search.exact:
        witness["reason"] = "sampling was inconclusive"
        return "degenerate", witness

    return _settle(search.form is not None, action), witness


def _frobenius(action, rng, cfg):
    return _forms(action, rng, cfg)


def _symmetric(action, rng, cfg):
    return _forms(action, rng, cfg, symmetric=True)


def _subgroup(action, rng, cfg):
    cp = build_crossed(action)
    group = action.group
    report = Report("subgroups")
    found = groups.subgroups(group)

    for h in found:
        prefix = "{%s}" % ",".join(group.label(g) for g in h)
        report.merge(subgroup_decomposition(cp, h), prefix=prefix)

    witness = {"subgroups": len(found), "failures": report.axioms[:5]}
    return _settle(report.passed, action), witness


def invariant_ideals(action):
    """Proper nonzero invariant ideals among the radical, the D_g and their
    intersections with the radical

    Examples:
        >>> from pcross.algebras import upper_triangular
        >>> ut2 = upper_triangular(QQ, 2)
        >>> action = fixtures.trivial_action(ut2, groups.make_cyclic(2))
        >>> [[str(c) for c in v] for v in invariant_ideals(action)[0]]
        [['0', '1', '0']]
    """
    r = action.algebra
    candidates = [action.ideal(g) for g in action.support]

    try:
        radical = Subspace(r.field, r.dim, algebras.jacobson_radical(r))
    except UnsupportedField:
        radical = None

    if radical is not None:
        candidates = [radical] + candidates
        candidates += [radical.intersect(ideal) for ideal in candidates[1:]]

    found = []

    for space in candidates:
        if 0 < space.dim < r.dim and space.basis not in found:
            if is_invariant(action, space.basis) is None:
                found.append(space.basis)

    return found


def _quotient(action, rng, cfg):
    ideals = invariant_ideals(action)
    witness = {"candidates": len(ideals)}

    if not ideals:
        return "degenerate", witness

    basis = rng.choice(ideals)
    report = quotient_isomorphism(action, basis)
    witness.update({"ideal_dim": len(basis), "failures": report.axioms[:5]})
    return _settle(report.passed, action), witness


def _fingerprints(algebra):
    return {
        "center_dim": len(algebras.center(algebra)),
        "semisimple": algebras.is_semisimple(algebra),
    }


def _globalization(action, rng, cfg):
    witness = {}

    if action.is_twisted:
        pair = EnvelopingPair(action, action.source, action.embedding)
        report = verify_enveloping(pair)

        # the source may hold orbits that never meet R
        failures = [a for a in report.axioms if a != "generated"]
        witness.update({"mode": "verified", "failures": failures})
        return _settle(not failures, action), witness

    pair = globalize(action)
    t = pair.enveloping.algebra
    report = verify_enveloping(pair)
    recovered = restrict_global(pair.enveloping, pair.idempotent)
    space = Subspace(action.field, t.dim, recovered.embedding.columns())
    columns = [space.coordinates(v) for v in pair.embedding.columns()]
    change = Matrix.from_columns(action.field, columns, rows=recovered.dim)
    report.merge(align_actions(action, recovered, change), prefix="round trip")
    witness["T_dim"] = t.dim

    try:
        small = _fingerprints(build_crossed(action).as_algebra)
        whole = build_crossed(global_as_partial(pair.enveloping)).as_algebra
        big = _fingerprints(whole)
    except UnsupportedField as err:
        witness["fingerprint"] = str(err)
    else:
        witness["fingerprint"] = {"R*G": small, "T*G": big}
        msg = "R*G and T*G fingerprints differ"
        report.check(small == big, "fingerprint", msg)

    witness["failures"] = report.axioms
    return _settle(report.passed, action), witness


def _triangular(instance, rng, cfg):
    L, action = instance
    report = triangular_crossed_iso(L, action)
    report.merge(validate_relative(extract_component_actions(L, action)), "relative")
    witness = {"dim": L.algebra.dim, "failures": report.axioms, "notes": report.notes}
    return _settle(report.passed, action), witness


def _fixedring(action, rng, cfg):
    r, group, field = action.algebra, action.group, action.field
    basis = fixed_ring(action)
    escape = algebras.is_subalgebra(r, basis)
    unital = r.unit in Subspace(field, r.dim, basis)
    witness = {"dim": len(basis), "escape": escape, "unital": unital}
    passed = escape is None and unital
    source = getattr(action, "source", None)
    order = field(group.order) if group.is_finite else field.zero

    if source is not None and not source.is_twisted and order != 0:
        t = source.algebra
        total = Matrix.zeros(field, t.dim, t.dim)

        for g in group.elements:
            total = total + source.beta(g)

        average = total.scale(field.one / order)
        image = Subspace(field, t.dim, average.columns())
        fixed = Subspace(field, t.dim, fixed_ring(global_as_partial(source)))
        averaged = average * average == average and image == fixed
        witness["averaging"] = averaged
        passed = passed and averaged

    return _settle(passed, action), witness


def _ut2_trivial():
    ut2 = algebras.upper_triangular(QQ, 2)
    return fixtures.trivial_action(ut2, groups.make_cyclic(2))


class Suite(object):
    """A claim, its check, the fixed instances run first and the size caps
    for random instances"""

    def __init__(self, claim, check, fixed=(), caps=(MAX_DIM, MAX_ORDER), **kw):
        self.claim = claim
        self.check = check
        self.fixed = tuple(fixed)
        self.caps = Bounds(*caps)
        self.twist = kw.get("twist", True)
        self.prepare = kw.get("prepare")

    def instance(self, trial, rng, cfg):
        if trial < len(self.fixed):
            return self.fixed[trial]()

        bounds = Bounds(
            min(cfg.max_dim, self.caps.max_dim), min(cfg.max_order, self.caps.max_order)
        )
        action = random_action(rng.getrandbits(64), bounds, cfg.field, self.twist)
        return self.prepare(action) if self.prepare else action


SUITES = {
    "artinian": Suite(
        "R*G is finite dimensional iff R is and G is finite, given finite type",
        _artinian,
        [fixtures.z_transfer, fixtures.z_on_field],
    ),
    "noetherian": Suite(
        "finite support gives an associative R*G of dimension sum dim D_g",
        _noetherian,
        [fixtures.z_transfer, fixtures.truncated_restriction],
        caps=(4, 6),
    ),
    "semisimple": Suite(
        "R is semisimple iff R*G is, when |G| is invertible",
        _semisimple,
        [fixtures.gf2_c2],
        caps=(4, 6),
    ),
    "maschke": Suite(
        "the averaged projection is an R*G-linear idempotent onto N",
        _maschke,
        [fixtures.c2_swap],
        caps=(3, 3),
    ),
    "frobenius": Suite(
        "R Frobenius implies R*G Frobenius",
        _frobenius,
        [fixtures.dual_trivial_c2, _ut2_trivial],
        caps=(3, 4),
    ),
    "symmetric": Suite(
        "R symmetric implies R*G symmetric",
        _symmetric,
        [fixtures.dual_trivial_c2, _ut2_trivial],
        caps=(3, 4),
    ),
    "subgroup": Suite(
        "R*G = R*H + A with A an R*H-bimodule for every subgroup H",
        _subgroup,
        [fixtures.c3_restriction],
        caps=(4, 6),
    ),
    "quotient": Suite(
        "(R*G)/(I*G) = (R/I)*G for invariant ideals I",
        _quotient,
        [_ut2_trivial],
        caps=(4, 4),
    ),
    "globalization": Suite(
        "globalize then restrict recovers the action, and R*G and T*G share "
        "center dimension and semisimplicity",
        _globalization,
        [fixtures.c3_restriction, fixtures.c2_swap],
        caps=(3, 4),
    ),
    "triangular": Suite(
        "L*G = (R*G, M, S*G) for corner preserving actions on L = (R, N, S)",
        _triangular,
        [fixtures.sign_on_bimodule, fixtures.corner_swap],
        caps=(2, 3),
        twist=False,
        prepare=diagonal_extension,
    ),
    "fixedring": Suite(
        "the partial fixed ring is a unital subalgebra, and averaging a global "
        "action projects onto its fixed ring",
        _fixedring,
        [fixtures.z_transfer, fixtures.c2_swap],
        caps=(4, 4),
    ),
}


def run_trial(cfg, trial):
    """Runs one trial of a suite. Picklable for worker processes.

    Returns:
        Finding
    """
    suite = SUITES[cfg.suite]
    rng = random.Random("%s:%s:%s" % (cfg.seed, cfg.suite, trial))
    instance = suite.instance(trial, rng, cfg)
    L, action = instance if isinstance(instance, tuple) else (None, instance)
    algebra = action.algebra if L is None else L.algebra
    check = action if L is None else instance

    try:
        verdict, witness = suite.check(check, rng, cfg)
    except HypothesisViolation as err:
        verdict, witness = "expected", {"hypothesis": str(err), "at": err.witness}
    except UNDECIDED as err:
        verdict, witness = "degenerate", {"reason": str(err)}
    except PcrossError as err:
        verdict, witness = "refuted", {"error": str(err), "at": err.witness}

    kwargs = {"bounds": cfg.bounds, "field": cfg.field}
    args = (suite.claim, verdict, witness, cfg.seed, trial)
    finding = Finding(cfg.suite, fingerprint(algebra, action), *args, **kwargs)
    logger.debug("%s trial %i: %s", cfg.suite, trial, verdict)
    return finding


def run_suite(cfg):
    """Runs every trial of a suite, in a process pool when `cfg.workers` > 1.
    Findings are ordered by trial index.

    Returns:
        List[Finding]

    Examples:
        >>> findings = run_suite(LabConfig("semisimple", trials=1, field="GF(2)"))
        >>> findings[0].verdict, findings[0].witness["radical_dim"]
        ('expected', 1)
    """
    trials = range(cfg.trials)

    if cfg.workers > 1:
        with ProcessPoolExecutor(max_workers=cfg.workers) as executor:
            findings = list(executor.map(run_trial, repeat(cfg), trials))
    else:
        findings = [run_trial(cfg, trial) for trial in trials]

    if cfg.suite == "semisimple":
        report = semisimple_controls(findings)

        if not report.passed:
            logger.error("\n".join(report.lines()))

    logger.debug("%s: %i findings", cfg.suite, len(findings))
    return findings


def semisimple_controls(findings):
    """Checks that semisimple confirmations and char K | |G| control outcomes
    never share a characteristic

    Returns:
        Report

    Examples:
        >>> cfg = LabConfig("semisimple", trials=3, field="GF(2)")
        >>> semisimple_controls(run_suite(cfg)).passed
        True
    """
    report = Report("semisimple controls")

    for finding in findings:
        divides = finding.witness.get("characteristic_divides")

        if finding.verdict == "confirmed":
            msg = "confirmed although char K divides |G|"
            report.check(not divides, "disjoint", msg, trial=finding.trial)
        elif finding.verdict == "expected":
            msg = "control outcome although |G| is invertible"
            report.check(divides is not False, "disjoint", msg, trial=finding.trial)

    return report


def replay(finding):
    """Re-runs the trial behind a finding (a :class:`Finding` or its dict)

    Examples:
        >>> first = run_suite(LabConfig("noetherian", seed=3, trials=3))[-1]
        >>> again = replay(first.to_dict())[0]
        >>> again.to_dict() == first.to_dict()
        True
    """
    if isinstance(finding, Finding):
        finding = finding.to_dict()

    max_dim, max_order = finding.get("bounds", (4, 4))
    trial = finding["trial"]
    kwargs = {"max_dim": max_dim, "max_order": max_order}
    kwargs["field"] = finding.get("field", "Q")
    cfg = LabConfig(finding["suite"], finding["seed"], trial + 1, **kwargs)
    return [run_trial(cfg, trial)]
