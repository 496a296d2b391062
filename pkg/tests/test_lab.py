# -*- coding: utf-8 -*-
# vim: sw=4:ts=4:expandtab

"""
tests.test_lab
~~~~~~~~~~~~~~

Provides unit tests for the verification campaigns.
"""

import nose.tools as nt

from hypothesis import given, settings, strategies as st

from pcross import fixtures, lab
from pcross.actions import validate_action
from pcross.utils import MalformedInput, UnknownSuite

from . import BaseTest

FINDING_KEYS = [
    "bounds",
    "claim",
    "field",
    "fingerprint",
    "seed",
    "suite",
    "trial",
    "verdict",
    "witness",
]


def fixed_findings(name, **kwargs):
    trials = len(lab.SUITES[name].fixed)
    return lab.run_suite(lab.LabConfig(name, trials=trials, **kwargs))


class TestConfig(BaseTest):
    def test_defaults(self):
        cfg = lab.LabConfig("maschke")
        nt.assert_equal(0, cfg.seed)
        nt.assert_equal(10, cfg.trials)
        nt.assert_equal(lab.Bounds(4, 4), cfg.bounds)
        nt.assert_equal("Q", str(cfg.field))
        nt.assert_equal("GF(3)", str(lab.LabConfig("maschke", field="GF(3)").field))

    def test_errors(self):
        with nt.assert_raises(UnknownSuite) as cm:
            lab.LabConfig("perfect")

        nt.assert_equal({"suite": "perfect"}, cm.exception.witness)

        bad = [
            {"trials": 0},
            {"max_dim": 7},
            {"max_order": 9},
            {"workers": 0},
            {"seed": -1},
            {"seed": 2 ** 64},
        ]

        for kwargs in bad:
            with nt.assert_raises(MalformedInput):
                lab.LabConfig("maschke", **kwargs)


class TestRandomActions(BaseTest):
    @settings(max_examples=15, deadline=None)
    @given(st.integers(min_value=0, max_value=2 ** 32), st.integers(1, 4))
    def test_valid(self, seed, max_order):
        bounds = lab.Bounds(3, max_order)
        action = lab.random_action(seed, bounds)
        nt.assert_true(action.dim <= 3)
        nt.assert_true(action.group.order <= max_order)
        self.assertPassed(validate_action(action))

    def test_deterministic(self):
        first = lab.random_action(11, lab.Bounds(4, 4))
        second = lab.random_action(11, lab.Bounds(4, 4))
        nt.assert_equal(first.support, second.support)
        args = (first.algebra, first)
        nt.assert_equal(lab.fingerprint(*args), lab.fingerprint(second.algebra, second))

    def test_untwisted(self):
        for seed in range(10):
            action = lab.random_action(seed, lab.Bounds(2, 4), twist=False)
            nt.assert_false(action.is_twisted)

    def test_fingerprints(self):
        z_transfer, z_on_field = fixtures.z_transfer(), fixtures.z_on_field()
        first = lab.fingerprint(z_transfer.algebra, z_transfer)
        nt.assert_equal(12, len(first))
        nt.assert_not_equal(first, lab.fingerprint(z_on_field.algebra, z_on_field))


class TestSuites(BaseTest):
    def test_fixed_instances(self):
        for name in sorted(lab.SUITES):
            findings = fixed_findings(name)
            nt.assert_equal(len(lab.SUITES[name].fixed), len(findings))

            for finding in findings:
                nt.assert_false(finding.refuted, finding.to_dict())

    def test_artinian(self):
        findings = fixed_findings("artinian")
        nt.assert_equal(["confirmed", "confirmed"], [f.verdict for f in findings])
        witness = findings[0].witness
        nt.assert_equal(4, witness["dim"])
        nt.assert_false(witness["finite_type"])
        nt.assert_equal("Z", witness["group"])

    def test_controls(self):
        noetherian = fixed_findings("noetherian")
        nt.assert_equal("confirmed", noetherian[0].verdict)
        nt.assert_equal("degenerate", noetherian[1].verdict)

        findings = fixed_findings("triangular")
        nt.assert_equal(["confirmed", "expected"], [f.verdict for f in findings])

        findings = fixed_findings("frobenius")
        nt.assert_equal(["confirmed", "degenerate"], [f.verdict for f in findings])
        nt.assert_equal("R has no such form", findings[1].witness["reason"])

        semisimple = fixed_findings("semisimple")[0]
        nt.assert_equal("expected", semisimple.verdict)
        nt.assert_true(semisimple.witness["characteristic_divides"])

    def test_findings(self):
        finding = lab.run_suite(lab.LabConfig("noetherian", seed=5, trials=1))[0]
        nt.assert_equal(FINDING_KEYS, sorted(finding.to_dict()))
        nt.assert_equal([4, 4], finding.to_dict()["bounds"])
        nt.assert_equal("Q", finding.to_dict()["field"])
        nt.assert_equal(5, finding.seed)
        nt.assert_equal(0, finding.trial)

    def test_replay(self):
        cfg = lab.LabConfig("subgroup", seed=9, trials=3, max_dim=3, max_order=3)

        for finding in lab.run_suite(cfg):
            replayed = lab.replay(finding)
            nt.assert_equal([finding.to_dict()], [f.to_dict() for f in replayed])

    def test_workers(self):
        kwargs = {"seed": 2, "trials": 3}
        serial = lab.run_suite(lab.LabConfig("noetherian", **kwargs))
        pooled = lab.run_suite(lab.LabConfig("noetherian", workers=2, **kwargs))
        nt.assert_equal([f.to_dict() for f in serial], [f.to_dict() for f in pooled])

    def test_invariant_ideals(self):
        nt.assert_equal([], lab.invariant_ideals(fixtures.c2_swap()))
        found = lab.invariant_ideals(fixtures.z_transfer())
        nt.assert_equal([], found)

    def test_semisimple_controls(self):
        for field in ("GF(2)", "Q"):
            cfg = lab.LabConfig("semisimple", trials=4, field=field)
            self.assertPassed(lab.semisimple_controls(lab.run_suite(cfg)))

        args = ("semisimple", "0" * 12, lab.SUITES["semisimple"].claim)
        mixed = [
            lab.Finding(*args, "confirmed", {"characteristic_divides": True}, 0, 0),
            lab.Finding(*args, "expected", {"characteristic_divides": False}, 0, 1),
            lab.Finding(*args, "expected", {"hypothesis": "1/2"}, 0, 2),
            lab.Finding(*args, "confirmed", {"characteristic_divides": False}, 0, 3),
        ]
        report = lab.semisimple_controls(mixed)
        nt.assert_equal(["disjoint", "disjoint"], report.axioms)
        trials = [f["witness"]["trial"] for f in report.failures]
        nt.assert_equal([0, 1], trials)


class TestCampaigns(BaseTest):
    def campaign(self, suite, trials, **kwargs):
        cfg = lab.LabConfig(suite, seed=1, trials=trials, **kwargs)
        findings = lab.run_suite(cfg)
        nt.assert_equal(trials, len(findings))
        refuted = [f.to_dict() for f in findings if f.refuted]
        nt.assert_equal([], refuted)
        return findings

    def test_associativity(self):
        findings = self.campaign("noetherian", 1000)
        confirmed = [f for f in findings if f.verdict == "confirmed"]
        nt.assert_true(confirmed)

    def test_semisimple_transfer(self):
        findings = self.campaign("semisimple", 201)
        random = findings[1:]
        divides = [f.witness.get("characteristic_divides") for f in random]
        nt.assert_false(any(divides))
        nt.assert_true(all(f.verdict != "expected" for f in random))
        self.assertPassed(lab.semisimple_controls(findings))

    def test_maschke(self):
        findings = self.campaign("maschke", 100)
        nt.assert_equal("confirmed", findings[0].verdict)

        for finding in findings:
            if finding.verdict == "expected" and "hypothesis" not in finding.witness:
                nt.assert_true(finding.witness["strictly_partial"])
                nt.assert_true(finding.witness["idempotent_sum_formula"])

    def test_quotient(self):
        self.campaign("quotient", 50)

    def test_globalization(self):
        findings = self.campaign("globalization", 100)
        nt.assert_true(any(f.verdict == "confirmed" for f in findings))

    def test_triangular(self):
        findings = self.campaign("triangular", 22)
        nt.assert_equal("confirmed", findings[0].verdict)
