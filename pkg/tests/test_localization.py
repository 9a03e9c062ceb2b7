"""Tests for the boundary functors and the left adjoint construction."""

import copy
import unittest

import pytest

from dendro_segal_toolkit.dst_core.config import ToolkitConfig
from dendro_segal_toolkit.dst_core.exceptions import (
    ArityMismatchError,
    FactorizationError,
    InvalidMorphismError,
)
from dendro_segal_toolkit.modules.localization import (
    OverObject,
    WeakFiberObject,
    as_cyclic,
    as_rootable,
    as_symmetric,
    bp_factorizations,
    build_tf,
    build_tf_cyclic,
    collapse_map,
    collapse_maps,
    factor_through_tf,
    factor_through_tf_cyclic,
    functor_name,
    identifications,
    initial_maps,
    is_boundary_preserving,
    is_collapse,
    lcyc_map,
    localize,
    lpl_leaf_map,
    lpl_map,
    lpl_map_contravariant,
    weak_fiber_objects,
)
from dendro_segal_toolkit.modules.localization.checks import (
    LocalizationModule,
    check_adjunction,
    check_boundary_preserving_invertible,
    check_collapse,
    check_descriptions_agree,
    check_extension_squares,
    check_functoriality,
    check_initiality,
    check_linear_constancy,
    check_worked_example,
)
from dendro_segal_toolkit.modules.simplex_targets import (
    DeltaMap,
    compose_lambda,
    delta_to_lambda,
    delta_to_pointed,
    identity_delta,
    lambda_to_fin,
    rotation,
)
from dendro_segal_toolkit.modules.tree_hom import TreeMorphism, compose, hom, identity
from dendro_segal_toolkit.modules.tree_hom.checks import variant_objects
from dendro_segal_toolkit.modules.trees import (
    ETA,
    ROOT,
    EdgeRef,
    decode,
    enumerate_trees,
    forget_root,
    make_corolla,
    make_linear,
)

from .dst_testkit import example_morphism, example_source, example_target

WORKED_IMAGE = (0, 1, 2, 4, 4)


class TestPlaneFunctor(unittest.TestCase):
    def test_worked_example(self):
        image = localize(example_morphism())
        self.assertEqual(image, DeltaMap(4, 4, WORKED_IMAGE))
        self.assertEqual(functor_name(example_morphism()), "pl")
        self.assertEqual(lpl_map_contravariant(example_morphism()), image)
        self.assertIsNone(check_worked_example())

    def test_worked_example_leaf_partition(self):
        partition = lpl_leaf_map(example_morphism())
        self.assertEqual((partition.lower, partition.upper), (0, 0))
        self.assertEqual(partition.values, (0, 1, 2, 2))

    def test_maps_out_of_eta(self):
        expected = {"": (0, 2), "0": (0, 1), "1": (1, 2)}
        for alpha in hom(ETA, make_corolla(2)):
            with self.subTest(root=str(alpha(ROOT))):
                self.assertEqual(lpl_map(alpha).values, expected[str(alpha(ROOT))])

    def test_constants(self):
        images = {str(a(ROOT)): lpl_map(a) for a in hom(make_corolla(0), decode("[[]]"))}
        self.assertEqual(images["0"], DeltaMap(0, 0, (0,)))
        self.assertEqual(images[""], DeltaMap(0, 0, (0,)))

    def test_linear_trees_go_to_the_identity(self):
        for alpha in hom(make_linear(1), make_linear(3)):
            with self.subTest(images=[str(e) for e in alpha.images]):
                self.assertEqual(lpl_map(alpha), identity_delta(1))
        self.assertIsNone(check_linear_constancy(3))

    def test_localize_rejects_invalid_maps(self):
        bogus = TreeMorphism(example_source(), example_target(), (ROOT,) * 6)
        with self.assertRaises(InvalidMorphismError):
            localize(bogus)
        with self.assertRaises(InvalidMorphismError):
            localize("not a morphism")


class TestComparisonFunctors(unittest.TestCase):
    def test_worked_example_in_every_flavor(self):
        alpha = example_morphism()
        plane = lpl_map(alpha)
        cyclic = as_cyclic(alpha)
        cases = [
            (as_symmetric(alpha), "sym", delta_to_pointed(plane)),
            (cyclic, "cyc", delta_to_lambda(plane)),
            (as_rootable(cyclic), "abs", lambda_to_fin(delta_to_lambda(plane))),
        ]
        for morphism, name, expected in cases:
            with self.subTest(functor=name):
                self.assertEqual(functor_name(morphism), name)
                self.assertEqual(localize(morphism), expected)

    def test_extension_squares(self):
        self.assertIsNone(check_extension_squares(enumerate_trees(1, 2)))

    def test_descriptions_agree(self):
        trees = enumerate_trees(1, 2)
        self.assertIsNone(check_descriptions_agree(trees, variant_objects(trees)["cyc"]))

    def test_functoriality(self):
        variants = variant_objects(enumerate_trees(1, 2))
        for kind, objects in variants.items():
            with self.subTest(kind=kind):
                self.assertIsNone(check_functoriality(kind, objects))


class TestBoundary(unittest.TestCase):
    def test_collapse_map(self):
        tree = example_target()
        alpha = collapse_map(tree)
        self.assertTrue(alpha.is_valid())
        self.assertTrue(is_collapse(alpha))
        self.assertEqual(lpl_map(alpha), identity_delta(tree.arity))

    def test_collapse_maps_per_flavor(self):
        variants = variant_objects([decode("[[e,e],e]")])
        self.assertEqual(len(collapse_maps(variants["pl"][0])), 1)
        self.assertEqual(len(collapse_maps(variants["cyc"][0])), 4)
        for kind, objects in variants.items():
            for alpha in collapse_maps(objects[0]):
                with self.subTest(kind=kind):
                    self.assertTrue(is_collapse(alpha))

    def test_boundary_preserving(self):
        self.assertTrue(is_boundary_preserving(identity(example_source())))
        self.assertFalse(is_boundary_preserving(example_morphism()))

    def test_boundary_preserving_maps_are_invertible(self):
        self.assertIsNone(check_boundary_preserving_invertible(variant_objects(enumerate_trees(1, 2))))
        self.assertIsNone(check_collapse(enumerate_trees(2, 2), variant_objects(enumerate_trees(1, 2))))

    def test_weak_fiber_objects(self):
        with self.assertRaises(InvalidMorphismError):
            WeakFiberObject(make_corolla(1), DeltaMap(1, 1, (0, 0)))
        self.assertEqual(OverObject(make_corolla(2), DeltaMap(2, 3, (0, 1, 3))).n, 3)
        cyc = forget_root(make_corolla(2))
        self.assertEqual(len(identifications(cyc)), 3)
        self.assertEqual(len(weak_fiber_objects(make_corolla(2))), 1)

    def test_corolla_is_initial(self):
        for fiber in weak_fiber_objects(forget_root(decode("[[e,e],e]"))):
            with self.subTest(identification=str(fiber.structure_map)):
                self.assertEqual(len(initial_maps(fiber)), 1)

    def test_initiality_in_every_flavor(self):
        for kind, objects in variant_objects(enumerate_trees(1, 2)).items():
            with self.subTest(kind=kind):
                self.assertIsNone(check_initiality(objects))


class TestLeftAdjoint(unittest.TestCase):
    def test_tf_of_worked_example(self):
        f = DeltaMap(4, 4, WORKED_IMAGE)
        tf, unit = build_tf(example_source(), f)
        self.assertEqual(tf, decode("[[[[e],[e],[e,e],[]]]]"))
        self.assertEqual(tf.arity, 4)
        self.assertTrue(unit.is_valid())
        self.assertEqual(lpl_map(unit), f)

    def test_tf_pads_outer_areas(self):
        tf, unit = build_tf(make_corolla(2), DeltaMap(2, 3, (1, 1, 2)))
        self.assertEqual(tf, decode("[e,[[],[e]],e]"))
        self.assertEqual(unit(ROOT), EdgeRef((1,)))

    def test_arity_mismatch(self):
        with self.assertRaises(ArityMismatchError):
            build_tf(make_corolla(2), identity_delta(1))

    def test_factorization_of_worked_example(self):
        alpha = example_morphism()
        beta = factor_through_tf(alpha)
        _, unit = build_tf(alpha.source_tree, lpl_map(alpha))
        self.assertTrue(is_boundary_preserving(beta))
        self.assertEqual(compose(beta, unit), alpha)
        self.assertEqual(bp_factorizations(alpha), [beta])

    def test_factorization_over_the_wrong_map(self):
        with self.assertRaises(FactorizationError):
            factor_through_tf(example_morphism(), identity_delta(4))

    def test_cyclic_construction(self):
        cyc = forget_root(make_corolla(2))
        _, unit, identification = build_tf_cyclic(cyc, rotation(2))
        self.assertTrue(unit.is_valid())
        self.assertEqual(compose_lambda(identification, lcyc_map(unit)), rotation(2))

    def test_cyclic_factorization(self):
        cyc = forget_root(make_corolla(2))
        for alpha in hom(cyc, cyc):
            with self.subTest(images=[str(a) for a in alpha.images]):
                beta = factor_through_tf_cyclic(alpha)
                self.assertTrue(is_boundary_preserving(beta))

    @pytest.mark.slow
    def test_adjunction_exhaustively(self):
        trees = enumerate_trees(1, 2)
        self.assertIsNone(check_adjunction(trees, variant_objects(trees)["cyc"], 3))


class TestLocalizationModule(unittest.TestCase):
    def setUp(self):
        self.module = LocalizationModule()
        self.module.initialize({})
        self.context = {"bounds": copy.deepcopy(ToolkitConfig.DEFAULT_CONFIG["bounds"]), "seed": 0, "samples": 200}

    def test_scopes_at_default_bounds(self):
        scopes = {name: scope for name, scope, _ in self.module.checks(self.context)}
        self.assertEqual(scopes["localization.initiality.pl"], "vertices<=4, arity<=3")
        self.assertEqual(scopes["localization.initiality.cyc"], "vertices<=2, arity<=2")
        self.assertEqual(scopes["localization.functoriality.pl"], "vertices<=3, arity<=3")
        self.assertEqual(scopes["localization.functoriality.rootable"], "vertices<=2, arity<=2")
        self.assertEqual(scopes["localization.extension_squares"], "vertices<=3, arity<=3")
        self.assertEqual(
            scopes["localization.bp_invertible"], "pl vertices<=3, arity<=3; sym, cyc, rootable vertices<=2, arity<=2"
        )

    def test_module_overrides_reach_the_pair_bounds(self):
        self.module.initialize({"bounds": {"pairs": {"max_vertices": 1, "max_arity": 2}}})
        scopes = {name: scope for name, scope, _ in self.module.checks(self.context)}
        self.assertEqual(scopes["localization.functoriality.pl"], "vertices<=1, arity<=2")

    @pytest.mark.slow
    def test_plane_checks_beyond_the_variant_bounds(self):
        self.assertIsNone(check_initiality(enumerate_trees(3, 3)))
        self.assertIsNone(check_functoriality("pl", enumerate_trees(2, 3)))
        self.assertIsNone(check_boundary_preserving_invertible({"pl": enumerate_trees(2, 3)}))


if __name__ == "__main__":
    unittest.main()
