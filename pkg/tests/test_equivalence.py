"""Tests for the constructions between 2-Segal sets and invertible operads."""

import json
import random
import unittest
from unittest.mock import patch

import pytest

from dendro_segal_toolkit.dst_core.exceptions import ArityBoundError, EquivalenceError
from dendro_segal_toolkit.dst_core.verdict import CheckResult
from dendro_segal_toolkit.modules.equivalence import (
    EquivalenceCertificate,
    certify_operad,
    certify_simplicial,
    corolla_inclusions,
    equivalence_fixtures,
    find_simplicial_isomorphism,
    is_simplicial_isomorphism,
    operad_to_simplicial,
    roundtrip_operad,
    roundtrip_simplicial,
    simplicial_to_operad,
)
from dendro_segal_toolkit.modules.equivalence.checks import (
    EquivalenceModule,
    check_operad_derived_segal,
    check_roundtrips,
    check_to_operad,
    check_to_simplicial,
)
from dendro_segal_toolkit.modules.operads import find_operad_isomorphism, is_invertible_operad, validate_operad
from dendro_segal_toolkit.modules.presheaves import chain_category, constant_point, nerve_of_category
from dendro_segal_toolkit.modules.simplex_targets import DeltaMap

from .dst_testkit import invertible_corpus, negative_simplicial, non_invertible_corpus, terminal_operad


class TestCorollaInclusions(unittest.TestCase):
    def test_inclusions(self):
        outer, inners = corolla_inclusions((1, 2))
        self.assertEqual(outer, DeltaMap(2, 3, (0, 1, 3)))
        self.assertEqual(inners, [DeltaMap(1, 3, (0, 1)), DeltaMap(2, 3, (1, 2, 3))])

    def test_nullary_slot(self):
        outer, inners = corolla_inclusions((0, 1))
        self.assertEqual(outer, DeltaMap(2, 1, (0, 0, 1)))
        self.assertEqual(inners[0], DeltaMap(0, 1, (0,)))


class TestSimplicialToOperad(unittest.TestCase):
    def test_point_gives_the_terminal_operad(self):
        operad = simplicial_to_operad(constant_point(2))
        self.assertEqual(len(operad.colors), 1)
        self.assertEqual(len(operad.operations), 3)
        self.assertIsNotNone(find_operad_isomorphism(operad, terminal_operad(2)))

    def test_fixtures_give_invertible_operads(self):
        for name, X in equivalence_fixtures(2).items():
            with self.subTest(fixture=name):
                log = []
                operad = simplicial_to_operad(X, log)
                self.assertTrue(validate_operad(operad))
                self.assertTrue(is_invertible_operad(operad))
                self.assertEqual(operad.colors, tuple(X.level(1)))

    def test_truncation_below_two(self):
        with self.assertRaises(EquivalenceError):
            simplicial_to_operad(constant_point(1))

    def test_not_two_segal(self):
        for name, X in negative_simplicial().items():
            with self.subTest(fixture=name):
                with self.assertRaises(EquivalenceError):
                    simplicial_to_operad(X)


class TestOperadToSimplicial(unittest.TestCase):
    def test_terminal_operad_gives_the_point(self):
        X = operad_to_simplicial(terminal_operad(2))
        self.assertEqual(X.sizes(), [1, 1, 1])
        self.assertIsNotNone(find_simplicial_isomorphism(X, constant_point(2)))

    def test_truncation_beyond_the_bound(self):
        with self.assertRaises(ArityBoundError):
            operad_to_simplicial(terminal_operad(2), 3)

    def test_non_invertible_operads(self):
        for name, operad in non_invertible_corpus().items():
            with self.subTest(operad=name):
                with self.assertRaises(EquivalenceError):
                    operad_to_simplicial(operad)


class TestIsomorphismSearch(unittest.TestCase):
    def test_identity_maps(self):
        X = nerve_of_category(chain_category(2), 2)
        identity = {n: {x: x for x in X.level(n)} for n in range(3)}
        self.assertIsNone(is_simplicial_isomorphism(X, X, identity))

    def test_truncations_differ(self):
        X, Y = constant_point(2), constant_point(3)
        self.assertIn("truncations", is_simplicial_isomorphism(X, Y, {}))
        self.assertIsNone(find_simplicial_isomorphism(X, Y))

    def test_different_sizes(self):
        self.assertIsNone(
            find_simplicial_isomorphism(nerve_of_category(chain_category(2), 2), constant_point(2))
        )


class TestCertificates(unittest.TestCase):
    def test_failed_certificate(self):
        certificate = certify_operad(constant_point(1))
        self.assertFalse(certificate)
        self.assertIsNotNone(certificate.counterexample)
        self.assertEqual(certificate.direction, "simplicial→operad")

    def test_certify_simplicial(self):
        certificate = certify_simplicial(terminal_operad(2))
        self.assertTrue(certificate)
        self.assertEqual(certificate.direction, "operad→simplicial")
        self.assertEqual(len(certificate.log), 2)

    def test_to_json_is_serializable(self):
        certificate = roundtrip_operad(terminal_operad(2))
        self.assertTrue(certificate)
        data = json.loads(json.dumps(certificate.to_json()))
        self.assertEqual(data["direction"], "operad→simplicial→operad")
        self.assertTrue(data["verified"])
        self.assertIsNone(data["counterexample"])
        self.assertEqual(set(data["bijections"]), {"colors", "operations"})

    def test_empty_certificate(self):
        certificate = EquivalenceCertificate("simplicial→operad")
        self.assertFalse(certificate)
        self.assertIsNone(certificate.to_json()["value"])

    def test_operad_roundtrips(self):
        for name, operad in invertible_corpus().items():
            with self.subTest(operad=name):
                certificate = roundtrip_operad(operad)
                self.assertTrue(certificate, certificate.counterexample)

    def test_simplicial_roundtrips(self):
        for name, X in equivalence_fixtures(2).items():
            with self.subTest(fixture=name):
                certificate = roundtrip_simplicial(X)
                self.assertTrue(certificate, certificate.counterexample)
                self.assertEqual(set(certificate.bijections), {"level 0", "level 1", "level 2"})

    @patch("dendro_segal_toolkit.modules.equivalence.certificate.is_invertible_operad")
    def test_simplicial_roundtrip_requires_an_invertible_operad(self, mock_invertible):
        mock_invertible.return_value = CheckResult.fail("unit has no inverse")
        certificate = roundtrip_simplicial(constant_point(2))
        self.assertFalse(certificate)
        self.assertIn("is not invertible: unit has no inverse", certificate.counterexample)
        self.assertTrue(any(line.startswith("is_invertible_operad") and line.endswith("False") for line in certificate.log))

    def test_roundtrip_of_a_non_invertible_operad_fails(self):
        certificate = roundtrip_operad(non_invertible_corpus()["Z/2"])
        self.assertFalse(certificate)


@pytest.mark.slow
class TestEquivalenceChecks(unittest.TestCase):
    def test_checks_pass_at_small_bounds(self):
        self.assertIsNone(check_to_operad(2))
        self.assertIsNone(check_to_simplicial(2))
        self.assertIsNone(check_operad_derived_segal(2))
        self.assertIsNone(check_roundtrips(2, 2, 2, random.Random(0)))

    def test_doubled_simplices_rejected_at_truncation_three(self):
        self.assertIsNone(check_to_operad(3))

    def test_arity_two_runs_without_doubled_simplices(self):
        module = EquivalenceModule()
        module.initialize({})
        context = {"bounds": {"truncation": 4, "operads": {"max_colors": 2, "arity_bound": 2}}, "seed": 0}
        scopes = {name: scope for name, scope, _ in module.checks(context)}
        self.assertEqual(scopes["equivalence.to_operad"], "N=2, arity<=2, no doubled simplices below N=3")
        outcome = module.execute(context)
        for verdict in outcome["verdicts"]:
            with self.subTest(check=verdict.check):
                self.assertTrue(verdict.result, verdict.counterexample)


if __name__ == "__main__":
    unittest.main()
