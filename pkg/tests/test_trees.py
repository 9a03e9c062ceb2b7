"""Tests for plane trees and their symmetric and rootable variants."""

import random
import unittest

from hypothesis import given
from hypothesis import strategies as st

from dendro_segal_toolkit.dst_core.exceptions import InvalidEdgeError, SerializationError, TreeError
from dendro_segal_toolkit.modules.trees import (
    ETA,
    ROOT,
    Arrow,
    CycTree,
    EdgeRef,
    RootableTree,
    SymTree,
    Tree,
    all_rerootings,
    canonicalize,
    count_trees,
    decode,
    enumerate_trees,
    forget_root,
    graft,
    grafting_decompositions,
    make_corolla,
    make_linear,
    plane_of,
    prune,
    random_permutation_of_children,
    symmetrize,
    variant_from_json,
)
from dendro_segal_toolkit.modules.trees.checks import (
    check_canonical_invariance,
    check_codecs,
    check_enumeration,
    check_graft_arity,
)

from .dst_testkit import LEFT_TREE, RIGHT_TREE, trees_strategy


class TestEdgeRef(unittest.TestCase):
    def test_parse_and_print(self):
        self.assertEqual(EdgeRef.parse(""), ROOT)
        self.assertEqual(EdgeRef.parse("0.1"), EdgeRef((0, 1)))
        self.assertEqual(str(EdgeRef((2, 0, 1))), "2.0.1")

    def test_parse_rejects_garbage(self):
        with self.assertRaises(SerializationError):
            EdgeRef.parse("0.x")

    def test_navigation(self):
        edge = EdgeRef((0, 1))
        self.assertEqual(edge.parent, EdgeRef((0,)))
        self.assertIsNone(ROOT.parent)
        self.assertEqual(edge.child(3), EdgeRef((0, 1, 3)))
        self.assertTrue(EdgeRef((0,)).is_prefix_of(edge))
        self.assertFalse(edge.is_prefix_of(EdgeRef((0,))))


class TestPlaneTree(unittest.TestCase):
    def test_eta(self):
        self.assertTrue(ETA.is_eta)
        self.assertEqual(ETA.edges, (ROOT,))
        self.assertEqual(ETA.arity, 1)
        self.assertEqual(ETA.num_vertices, 0)
        self.assertEqual(ETA.encoding, "e")

    def test_corollas(self):
        for n in range(4):
            with self.subTest(n=n):
                corolla = make_corolla(n)
                self.assertEqual(corolla.arity, n)
                self.assertEqual(corolla.num_vertices, 1)
                self.assertEqual(len(corolla.edges), n + 1)
        self.assertEqual(make_corolla(0).encoding, "[]")
        with self.assertRaises(TreeError):
            make_corolla(-1)

    def test_linear(self):
        self.assertEqual(make_linear(0), ETA)
        self.assertEqual(make_linear(2).encoding, "[[e]]")
        self.assertEqual(make_linear(3).arity, 1)

    def test_worked_example_shapes(self):
        left, right = decode(LEFT_TREE), decode(RIGHT_TREE)
        self.assertEqual((left.arity, left.num_vertices), (4, 2))
        self.assertEqual((right.arity, right.num_vertices), (4, 4))
        self.assertEqual(right.max_vertex_arity, 3)
        self.assertEqual([str(e) for e in left.edges], ["", "0", "0.0", "0.1", "0.2", "0.3"])
        self.assertEqual([str(v) for v in right.vertices], ["", "0", "1", "2"])
        self.assertEqual([str(e) for e in right.leaves], ["0.0", "0.1", "1.0", "1.1"])

    def test_inputs_and_subtrees(self):
        tree = decode(RIGHT_TREE)
        self.assertEqual(tree.inputs(ROOT), (EdgeRef((0,)), EdgeRef((1,)), EdgeRef((2,))))
        self.assertEqual(tree.subtree(EdgeRef((2,))), make_corolla(0))
        self.assertTrue(tree.is_internal(EdgeRef((2,))))
        self.assertFalse(tree.is_internal(ROOT))
        with self.assertRaises(InvalidEdgeError):
            tree.inputs(EdgeRef((0, 0)))
        with self.assertRaises(InvalidEdgeError):
            tree.subtree(EdgeRef((5,)))

    def test_codecs(self):
        tree = decode(RIGHT_TREE)
        self.assertEqual(tree.encoding, RIGHT_TREE)
        self.assertEqual(tree.to_json(), {"v": [{"v": ["e", "e"]}, {"v": ["e", "e"]}, {"v": []}]})
        self.assertEqual(Tree.from_json(tree.to_json()), tree)

    def test_decode_errors(self):
        for text in ["", "[", "[e,", "[e]]", "x", "[e;e]"]:
            with self.subTest(text=text):
                with self.assertRaises(SerializationError):
                    decode(text)
        with self.assertRaises(SerializationError):
            Tree.from_json({"w": []})

    def test_trees_are_hashable_by_encoding(self):
        self.assertEqual(len({decode("[e,e]"), make_corolla(2), decode("[e]")}), 2)

    def test_pretty(self):
        rendered = make_corolla(2).pretty().splitlines()
        self.assertEqual(rendered[0], "root: vertex/2")
        self.assertEqual(rendered[1].strip(), "0: leaf")


class TestGrafting(unittest.TestCase):
    def test_graft(self):
        grafted = graft(make_corolla(1), EdgeRef((0,)), make_corolla(4))
        self.assertEqual(grafted, decode(LEFT_TREE))
        with self.assertRaises(InvalidEdgeError):
            graft(decode(LEFT_TREE), EdgeRef((0,)), make_corolla(2))

    def test_prune_inverts_graft(self):
        tree = decode(RIGHT_TREE)
        self.assertEqual(prune(tree, EdgeRef((0,))), decode("[e,[e,e],[]]"))

    def test_decompositions(self):
        tree = decode(RIGHT_TREE)
        decompositions = grafting_decompositions(tree)
        self.assertEqual(len(decompositions), 3)
        for edge, lower, upper in decompositions:
            with self.subTest(edge=str(edge)):
                self.assertEqual(graft(lower, edge, upper), tree)
        self.assertEqual(grafting_decompositions(make_corolla(3)), [])

    @given(trees_strategy(2, 2), trees_strategy(2, 2))
    def test_graft_arity(self, base, top):
        for leaf in base.leaves:
            self.assertEqual(graft(base, leaf, top).arity, base.arity + top.arity - 1)


class TestEnumeration(unittest.TestCase):
    def test_small_counts(self):
        cases = [((0, 3), 1), ((1, 2), 4), ((2, 2), 13), ((1, 0), 2)]
        for (v, a), expected in cases:
            with self.subTest(vertices=v, arity=a):
                self.assertEqual(len(enumerate_trees(v, a)), expected)
                self.assertEqual(count_trees(v, a), expected)

    def test_enumeration_order_and_bounds(self):
        trees = enumerate_trees(3, 2)
        self.assertEqual(trees[0], ETA)
        self.assertEqual(trees, sorted(trees, key=lambda t: t.sort_key))
        self.assertTrue(all(t.num_vertices <= 3 and t.max_vertex_arity <= 2 for t in trees))

    def test_counts_agree_across_bounds(self):
        for v in range(4):
            for a in range(4):
                with self.subTest(vertices=v, arity=a):
                    self.assertEqual(len(enumerate_trees(v, a)), count_trees(v, a))

    def test_negative_bounds(self):
        with self.assertRaises(TreeError):
            enumerate_trees(-1, 2)


class TestVariants(unittest.TestCase):
    def test_symmetrize_sorts_children(self):
        left = decode("[[e],e]")
        right = decode("[e,[e]]")
        self.assertEqual(symmetrize(left), symmetrize(right))
        self.assertIsInstance(symmetrize(left), SymTree)
        self.assertNotEqual(left, right)

    def test_forget_root_identifies_rerootings(self):
        tree = decode("[[e,e],e]")
        cyc = forget_root(tree)
        self.assertIsInstance(cyc, CycTree)
        rerootings = all_rerootings(tree)
        self.assertEqual(len(rerootings), tree.arity + 1)
        for rerooted in rerootings:
            with self.subTest(rerooted=rerooted.encoding):
                self.assertEqual(forget_root(rerooted), cyc)
                self.assertEqual(rerooted.arity, tree.arity)

    def test_cyclic_keeps_plane_structure(self):
        # rotating the children of a corolla is a rerooting, reflecting is not
        self.assertEqual(forget_root(decode("[[e],e,e]")), forget_root(decode("[e,[e],e]")))
        self.assertNotEqual(forget_root(decode("[[e,[]],e]")), forget_root(decode("[[[],e],e]")))

    def test_rootable_forgets_both(self):
        self.assertEqual(
            canonicalize(decode("[[e,[]],e]"), "rootable"),
            canonicalize(decode("[[[],e],e]"), "rootable"),
        )
        self.assertIsInstance(canonicalize(make_corolla(2), "rootable"), RootableTree)

    def test_unknown_kind(self):
        with self.assertRaises(TreeError):
            canonicalize(ETA, "planar")

    def test_variant_codec(self):
        tree = decode(RIGHT_TREE)
        for kind in ("sym", "cyc", "rootable"):
            with self.subTest(kind=kind):
                variant = canonicalize(tree, kind)
                document = variant.to_json()
                self.assertEqual(document["kind"], kind)
                self.assertEqual(variant_from_json(document), variant)
                self.assertEqual(plane_of(variant), variant.tree)
        self.assertEqual(variant_from_json({"kind": "pl", "tree": "e"}), ETA)
        with self.assertRaises(SerializationError):
            variant_from_json({"kind": "möbius", "tree": "e"})

    def test_arrow_parse(self):
        self.assertEqual(Arrow.parse("0.1*"), Arrow(EdgeRef((0, 1)), True))
        self.assertEqual(str(Arrow(EdgeRef((2,)), False)), "2")
        self.assertEqual(Arrow(ROOT).dual, Arrow(ROOT, True))

    @given(trees_strategy(3, 2), st.integers(0, 2**16))
    def test_symmetrize_ignores_child_order(self, tree, seed):
        shuffled = random_permutation_of_children(tree, random.Random(seed))
        self.assertEqual(symmetrize(shuffled), symmetrize(tree))


class TestTreeChecks(unittest.TestCase):
    def test_checks_pass_on_small_bounds(self):
        trees = enumerate_trees(2, 2)
        self.assertIsNone(check_enumeration(3, 2))
        self.assertIsNone(check_codecs(trees))
        self.assertIsNone(check_graft_arity(enumerate_trees(1, 2)))
        self.assertIsNone(check_canonical_invariance(trees, random.Random(0)))


if __name__ == "__main__":
    unittest.main()
