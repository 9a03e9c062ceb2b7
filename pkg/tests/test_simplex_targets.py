"""Tests for Δ, the linear orders with cut duality, Λ and the finite set categories."""

import itertools
import unittest
from math import comb

from hypothesis import given
from hypothesis import strategies as st

from dendro_segal_toolkit.dst_core.exceptions import (
    CompositionMismatchError,
    InvalidMorphismError,
    SerializationError,
)
from dendro_segal_toolkit.modules.simplex_targets import (
    CycMap,
    DeltaMap,
    FinMap,
    LinOrd,
    LinOrdMap,
    PointedMap,
    compose_delta,
    compose_lambda,
    compose_linord,
    count_delta,
    count_lambda,
    cut_dual_map,
    degeneracy,
    delta_to_lambda,
    delta_to_pointed,
    enumerate_delta,
    enumerate_lambda,
    epi_mono,
    face,
    identity_delta,
    identity_fin,
    identity_lambda,
    identity_pointed,
    interval_dual_map,
    lambda_dual,
    lambda_to_delta,
    lambda_to_fin,
    reverse_orientation,
    rotation,
)
from dendro_segal_toolkit.modules.simplex_targets.checks import (
    check_cut_duality,
    check_delta,
    check_inclusions,
    check_lambda,
    check_lambda_duality,
)

from .dst_testkit import delta_maps


class TestDelta(unittest.TestCase):
    def test_generators(self):
        self.assertEqual(face(2, 1).values, (0, 2))
        self.assertEqual(face(2, 0).values, (1, 2))
        self.assertEqual(degeneracy(1, 0).values, (0, 0, 1))
        self.assertEqual(str(face(2, 1)), "[1]→[2] [0, 2]")
        with self.assertRaises(InvalidMorphismError):
            face(0, 0)
        with self.assertRaises(InvalidMorphismError):
            degeneracy(1, 2)

    def test_validation(self):
        for n_src, n_dst, values in [(1, 2, (2, 1)), (1, 1, (0,)), (0, 1, (2,))]:
            with self.subTest(values=values):
                with self.assertRaises(InvalidMorphismError):
                    DeltaMap(n_src, n_dst, values)

    def test_cosimplicial_identities(self):
        # d^j d^i = d^i d^(j-1) for i < j
        for n in range(2, 5):
            for i, j in itertools.combinations(range(n + 1), 2):
                with self.subTest(n=n, i=i, j=j):
                    self.assertEqual(
                        compose_delta(face(n, j), face(n - 1, i)),
                        compose_delta(face(n, i), face(n - 1, j - 1)),
                    )

    def test_epi_mono(self):
        surjection, injection = epi_mono(DeltaMap(2, 2, (0, 0, 2)))
        self.assertEqual(surjection, DeltaMap(2, 1, (0, 0, 1)))
        self.assertEqual(injection, DeltaMap(1, 2, (0, 2)))
        self.assertTrue(surjection.is_surjective)
        self.assertTrue(injection.is_injective)

    def test_counts(self):
        for m, n in itertools.product(range(4), repeat=2):
            with self.subTest(m=m, n=n):
                self.assertEqual(len(enumerate_delta(m, n)), count_delta(m, n))
                self.assertEqual(count_delta(m, n), comb(m + n + 1, m + 1))
        self.assertEqual(count_delta(1, 1), 3)

    def test_compose_mismatch(self):
        with self.assertRaises(CompositionMismatchError):
            compose_delta(face(2, 0), face(2, 0))

    def test_json(self):
        f = DeltaMap(2, 3, (0, 1, 3))
        self.assertEqual(f.to_json(), {"n_src": 2, "n_dst": 3, "values": [0, 1, 3]})
        self.assertEqual(DeltaMap.from_json(f.to_json()), f)
        with self.assertRaises(SerializationError):
            DeltaMap.from_json({"n_src": 1})

    @given(delta_maps())
    def test_epi_mono_recomposes(self, f):
        surjection, injection = epi_mono(f)
        self.assertEqual(compose_delta(injection, surjection), f)


class TestCutDuality(unittest.TestCase):
    def test_interval_dual_of_face(self):
        # d^1: [1] → [2] skips 1, so the two intervals of [2] both land in the single interval of [1]
        dual = interval_dual_map(face(2, 1))
        self.assertEqual(len(dual.source), 2)
        self.assertEqual(len(dual.target), 1)
        self.assertEqual((dual.lower, dual.upper, dual.values), (0, 0, (0, 0)))

    def test_interval_dual_of_outer_face(self):
        dual = interval_dual_map(face(2, 0))
        self.assertEqual((dual.lower, dual.upper, dual.values), (1, 0, (0,)))
        self.assertEqual(dual.below, (0,))

    def test_linord_json(self):
        f = LinOrdMap(LinOrd(("a", "b", "c")), LinOrd(("x", "y")), 1, 0, (0, 1))
        document = f.to_json()
        self.assertEqual(document["below"], ["a"])
        self.assertEqual(document["map"], [["b", "x"], ["c", "y"]])
        self.assertEqual(LinOrdMap.from_json(document), f)

    def test_linord_validation(self):
        with self.assertRaises(InvalidMorphismError):
            LinOrd(("a", "a"))
        with self.assertRaises(InvalidMorphismError):
            LinOrdMap(LinOrd.standard(2), LinOrd.standard(2), 0, 0, (1, 0))
        with self.assertRaises(InvalidMorphismError):
            LinOrdMap(LinOrd.standard(2), LinOrd.standard(2), 1, 0, (0, 1))

    def test_compose_sends_outer_images_outward(self):
        f = LinOrdMap(LinOrd.standard(2), LinOrd.standard(2), 0, 0, (0, 1))
        g = LinOrdMap(LinOrd.standard(2), LinOrd.standard(1), 1, 0, (0,))
        gf = compose_linord(g, f)
        self.assertEqual((gf.lower, gf.upper, gf.values), (1, 0, (0,)))

    @given(delta_maps())
    def test_cut_dual_inverts_interval_dual(self, f):
        self.assertEqual(cut_dual_map(interval_dual_map(f)), f)

    @given(delta_maps(2), delta_maps(2))
    def test_contravariance(self, f, g):
        if f.n_dst != g.n_src:
            return
        self.assertEqual(
            interval_dual_map(compose_delta(g, f)),
            compose_linord(interval_dual_map(f), interval_dual_map(g)),
        )


class TestLambda(unittest.TestCase):
    def test_rotation(self):
        r = rotation(2)
        self.assertEqual(r.phi, (1, 2, 3))
        cube = compose_lambda(r, compose_lambda(r, r))
        self.assertEqual(cube, identity_lambda(2))
        self.assertTrue(r.is_iso)

    def test_normalized(self):
        self.assertEqual(CycMap.normalized(1, 2, (3, 5)), CycMap(1, 2, (0, 2)))
        with self.assertRaises(InvalidMorphismError):
            CycMap(1, 1, (0, 3))

    def test_counts(self):
        for m, n in itertools.product(range(4), repeat=2):
            with self.subTest(m=m, n=n):
                maps = enumerate_lambda(m, n)
                self.assertEqual(len(maps), count_lambda(m, n))
                self.assertEqual(len(set(maps)), len(maps))
        self.assertEqual(count_lambda(0, 0), 1)
        self.assertEqual(count_lambda(1, 1), 6)

    def test_delta_embeds(self):
        f = DeltaMap(1, 2, (0, 2))
        self.assertEqual(lambda_to_delta(delta_to_lambda(f)), f)
        with self.assertRaises(InvalidMorphismError):
            lambda_to_delta(rotation(1))

    def test_duality_is_an_involution(self):
        for m, n in itertools.product(range(3), repeat=2):
            for f in enumerate_lambda(m, n):
                with self.subTest(f=str(f)):
                    dual = lambda_dual(f)
                    self.assertEqual((dual.m, dual.n), (n, m))
                    self.assertEqual(lambda_dual(dual), f)

    def test_bare_interchange_squares_to_a_rotated_map(self):
        def interchange(f):
            return CycMap.normalized(f.n, f.m, [f.right_adjoint(j) for j in range(f.n + 1)])

        for m, n in itertools.product(range(3), repeat=2):
            for f in enumerate_lambda(m, n):
                with self.subTest(f=str(f)):
                    shifted = CycMap.normalized(m, n, [f(i + 1) - 1 for i in range(m + 1)])
                    self.assertEqual(interchange(interchange(f)), shifted)

    def test_reverse_orientation_is_an_involution(self):
        for f in enumerate_lambda(2, 1):
            with self.subTest(f=str(f)):
                self.assertEqual(reverse_orientation(reverse_orientation(f)), f)

    def test_json(self):
        f = rotation(3, 2)
        self.assertEqual(f.to_json(), {"m": 3, "n": 3, "phi0_to_phim": [2, 3, 4, 5]})
        self.assertEqual(CycMap.from_json(f.to_json()), f)
        with self.assertRaises(SerializationError):
            CycMap.from_json({"m": 1, "n": 1})


class TestFiniteSets(unittest.TestCase):
    def test_pointed_maps_fix_the_basepoint(self):
        with self.assertRaises(InvalidMorphismError):
            PointedMap(2, 2, (1, 0))
        with self.assertRaises(InvalidMorphismError):
            FinMap(0, 1, ())

    def test_identities(self):
        for n in range(4):
            with self.subTest(n=n):
                self.assertEqual(delta_to_pointed(identity_delta(n)), identity_pointed(n + 1))
                self.assertEqual(lambda_to_fin(identity_lambda(n)), identity_fin(n + 1))

    def test_outer_face_kills_an_interval(self):
        # d^0: [0] → [1] misses the only interval of [1]
        self.assertEqual(delta_to_pointed(face(1, 0)), PointedMap(2, 1, (0, 0)))

    def test_rotation_permutes_intervals(self):
        image = lambda_to_fin(rotation(2))
        self.assertTrue(image.is_bijection)
        self.assertNotEqual(image, identity_fin(3))


class TestSimplexChecks(unittest.TestCase):
    def test_checks_pass(self):
        self.assertIsNone(check_delta(2))
        self.assertIsNone(check_lambda(1))
        self.assertIsNone(check_cut_duality(2))
        self.assertIsNone(check_lambda_duality(1))
        self.assertIsNone(check_inclusions(1))


if __name__ == "__main__":
    unittest.main()
