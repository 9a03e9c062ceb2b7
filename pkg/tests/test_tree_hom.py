"""Tests for morphisms between trees."""

import copy
import random
import unittest

import pytest

from dendro_segal_toolkit.dst_core.config import ToolkitConfig
from dendro_segal_toolkit.dst_core.exceptions import (
    CompositionMismatchError,
    InvalidMorphismError,
    SerializationError,
)
from dendro_segal_toolkit.modules.tree_hom import (
    CycTreeMorphism,
    RootableTreeMorphism,
    SymTreeMorphism,
    TreeMorphism,
    brute_force_hom,
    compose,
    forget_root_morphism,
    hom,
    identity,
    match_operation,
    morphism_from_json,
    non_identity_count,
    operations_of,
    symmetrize_morphism,
    validate_morphism,
)
from dendro_segal_toolkit.modules.tree_hom.checks import (
    TreeHomModule,
    arrows_among,
    check_brute_force_agreement,
    check_category_laws,
    check_functoriality,
    check_operation_uniqueness,
    check_worked_example,
    outgoing_arrows,
    variant_objects,
)
from dendro_segal_toolkit.modules.trees import (
    ETA,
    ROOT,
    EdgeRef,
    canonicalize,
    decode,
    enumerate_trees,
    make_corolla,
)

from .dst_testkit import example_json, example_morphism, example_source, example_target


class TestOperations(unittest.TestCase):
    def test_worked_example_counts(self):
        self.assertEqual(non_identity_count(example_source()), 3)
        self.assertEqual(non_identity_count(example_target()), 11)

    def test_identities_are_operations(self):
        tree = decode("[[e,e],e]")
        identities = [op for op in operations_of(tree) if op.is_identity]
        self.assertEqual(len(identities), len(tree.edges))

    def test_corolla_operations(self):
        corolla = make_corolla(3)
        ops = [op for op in operations_of(corolla) if not op.is_identity]
        self.assertEqual(len(ops), 1)
        self.assertEqual(ops[0].inputs, corolla.leaves)
        self.assertEqual(ops[0].arity, 3)

    def test_match_operation(self):
        tree = example_target()
        inputs = [EdgeRef.parse(e) for e in ("0.0", "0.1", "1", "2")]
        self.assertIsNotNone(match_operation(tree, ROOT, inputs))
        self.assertIsNone(match_operation(tree, ROOT, list(reversed(inputs))))
        self.assertIsNotNone(match_operation(tree, ROOT, list(reversed(inputs)), ordered=False))
        self.assertIsNone(match_operation(tree, ROOT, inputs[:1] * 2, ordered=False))

    def test_operation_uniqueness(self):
        self.assertIsNone(check_operation_uniqueness(enumerate_trees(3, 2)))


class TestPlaneMorphisms(unittest.TestCase):
    def test_worked_example(self):
        morphism = example_morphism()
        self.assertTrue(validate_morphism(morphism))
        self.assertEqual(morphism(EdgeRef((0,))), ROOT)
        self.assertEqual(morphism(EdgeRef((0, 2))), EdgeRef((1,)))
        self.assertEqual(morphism.to_json(), example_json())
        self.assertIsNone(check_worked_example())

    def test_worked_example_is_enumerated(self):
        found = hom(example_source(), example_target(), root_image=ROOT)
        self.assertIn(example_morphism(), found)

    def test_json_roundtrip(self):
        decoded = morphism_from_json(example_json())
        self.assertIsInstance(decoded, TreeMorphism)
        self.assertEqual(decoded, example_morphism())

    def test_invalid_documents(self):
        broken = example_json()
        broken["edges"]["0.3"] = "0.0"
        with self.assertRaises(InvalidMorphismError):
            morphism_from_json(broken)
        partial = example_json()
        del partial["edges"]["0.3"]
        with self.assertRaises(InvalidMorphismError):
            morphism_from_json(partial)
        with self.assertRaises(SerializationError):
            morphism_from_json({"source": "e"})

    def test_hom_from_eta(self):
        for tree in (ETA, make_corolla(2), example_target()):
            with self.subTest(tree=tree.encoding):
                maps = hom(ETA, tree)
                self.assertEqual(len(maps), len(tree.edges))
                self.assertEqual({m(ROOT) for m in maps}, set(tree.edges))

    def test_corolla_endomorphisms(self):
        for n in (0, 2, 3):
            with self.subTest(n=n):
                self.assertEqual(hom(make_corolla(n), make_corolla(n)), [identity(make_corolla(n))])
        # the unary corolla also maps its vertex onto the identities of its two edges
        self.assertEqual(len(hom(make_corolla(1), make_corolla(1))), 3)

    def test_no_maps_into_eta(self):
        self.assertEqual(hom(make_corolla(2), ETA), [])
        self.assertEqual(len(hom(make_corolla(1), ETA)), 1)

    def test_composition(self):
        f = example_morphism()
        self.assertEqual(compose(identity(f.target), f), f)
        self.assertEqual(compose(f, identity(f.source)), f)
        g = hom(example_target(), example_target())[0]
        self.assertTrue(compose(g, f).is_valid())

    def test_composition_mismatch(self):
        f = example_morphism()
        with self.assertRaises(CompositionMismatchError):
            compose(f, f)
        with self.assertRaises(CompositionMismatchError):
            compose(identity(canonicalize(f.target, "sym")), f)
        with self.assertRaises(CompositionMismatchError):
            hom(ETA, canonicalize(ETA, "sym"))

    def test_unknown_color(self):
        with self.assertRaises(InvalidMorphismError):
            example_morphism()(EdgeRef((7,)))

    def test_brute_force_agreement(self):
        trees = enumerate_trees(1, 2)
        for source in trees:
            for target in trees:
                with self.subTest(source=source.encoding, target=target.encoding):
                    self.assertEqual(
                        {m.images for m in hom(source, target)},
                        {m.images for m in brute_force_hom(source, target)},
                    )


class TestVariantMorphisms(unittest.TestCase):
    def test_symmetric_corolla(self):
        sym = canonicalize(make_corolla(2), "sym")
        maps = hom(sym, sym)
        self.assertEqual(len(maps), 2)
        self.assertTrue(all(isinstance(m, SymTreeMorphism) for m in maps))
        self.assertEqual(maps[0].to_json()["kind"], "sym")

    def test_cyclic_corolla_rotations(self):
        cyc = canonicalize(make_corolla(2), "cyc")
        maps = hom(cyc, cyc)
        self.assertEqual(len(maps), 3)
        self.assertTrue(all(isinstance(m, CycTreeMorphism) for m in maps))

    def test_rootable_corolla_permutations(self):
        rootable = canonicalize(make_corolla(2), "rootable")
        maps = hom(rootable, rootable)
        self.assertEqual(len(maps), 6)
        self.assertTrue(all(isinstance(m, RootableTreeMorphism) for m in maps))

    def test_variant_json_roundtrip(self):
        cyc = canonicalize(make_corolla(2), "cyc")
        for morphism in hom(cyc, cyc):
            with self.subTest(edges=morphism.to_json()["edges"]):
                self.assertEqual(morphism_from_json(morphism.to_json()), morphism)

    def test_functors_on_worked_example(self):
        f = example_morphism()
        self.assertTrue(symmetrize_morphism(f).is_valid())
        self.assertTrue(forget_root_morphism(f).is_valid())
        self.assertEqual(symmetrize_morphism(identity(f.source)), identity(canonicalize(f.source, "sym")))

    def test_variant_objects(self):
        objects = variant_objects(enumerate_trees(1, 2))
        self.assertEqual(set(objects), {"pl", "sym", "cyc", "rootable"})


class TestCategoryChecks(unittest.TestCase):
    def test_plane_laws(self):
        self.assertIsNone(check_category_laws(enumerate_trees(1, 2), random.Random(3), samples=30))

    def test_functoriality(self):
        self.assertIsNone(check_functoriality(enumerate_trees(1, 2)))

    def test_plane_laws_with_sampled_triples(self):
        pool = enumerate_trees(3, 2)
        self.assertIsNone(check_category_laws(enumerate_trees(1, 2), random.Random(5), samples=25, sample_pool=pool))

    def test_sampling_needs_larger_trees_in_the_pool(self):
        rng = random.Random(0)
        trees = enumerate_trees(1, 2)
        self.assertIsNone(check_category_laws(trees, rng, samples=10, sample_pool=trees))
        self.assertEqual(rng.random(), random.Random(0).random())

    def test_arrows_are_grouped_by_source(self):
        trees = tuple(enumerate_trees(1, 1))
        arrows = arrows_among(trees)
        self.assertEqual(len(arrows), sum(len(hom(s, t)) for s in trees for t in trees))
        outgoing = outgoing_arrows(arrows)
        self.assertEqual(outgoing[ETA], [m for t in trees for m in hom(ETA, t)])

    def test_scopes_at_default_bounds(self):
        module = TreeHomModule()
        module.initialize({})
        context = {"bounds": copy.deepcopy(ToolkitConfig.DEFAULT_CONFIG["bounds"]), "seed": 0, "samples": 200}
        scopes = {name: scope for name, scope, _ in module.checks(context)}
        self.assertEqual(
            scopes["tree_hom.category_laws.pl"],
            "all triples at vertices<=2, arity<=3; 200 sampled triples at vertices<=4, arity<=3",
        )
        self.assertEqual(scopes["tree_hom.functoriality"], "vertices<=3, arity<=3")
        self.assertEqual(scopes["tree_hom.category_laws.cyc"], "all triples at vertices<=2, arity<=2")

    @pytest.mark.slow
    def test_variant_laws_and_brute_force(self):
        for kind, objects in variant_objects(enumerate_trees(1, 2)).items():
            with self.subTest(kind=kind):
                self.assertIsNone(check_category_laws(objects, random.Random(0), samples=20))
                self.assertIsNone(check_brute_force_agreement(objects))


if __name__ == "__main__":
    unittest.main()
