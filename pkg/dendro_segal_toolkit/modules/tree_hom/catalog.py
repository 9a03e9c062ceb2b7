"""The worked example: a morphism C_1 ∘ C_4 → a three-vertex tree."""

from dendro_segal_toolkit.modules.trees import EdgeRef, Tree

from .morphisms import TreeMorphism

EXAMPLE_SOURCE_JSON = {"v": [{"v": ["e", "e", "e", "e"]}]}
EXAMPLE_TARGET_JSON = {"v": [{"v": ["e", "e"]}, {"v": ["e", "e"]}, {"v": []}]}
EXAMPLE_EDGE_MAP = {
    "": "",
    "0": "",
    "0.0": "0.0",
    "0.1": "0.1",
    "0.2": "1",
    "0.3": "2",
}


def example_source() -> Tree:
    return Tree.from_json(EXAMPLE_SOURCE_JSON)


def example_target() -> Tree:
    return Tree.from_json(EXAMPLE_TARGET_JSON)


def example_morphism() -> TreeMorphism:
    return TreeMorphism.from_mapping(
        example_source(),
        example_target(),
        {EdgeRef.parse(k): EdgeRef.parse(v) for k, v in EXAMPLE_EDGE_MAP.items()},
    )


def example_json() -> dict:
    return {
        "source": EXAMPLE_SOURCE_JSON,
        "target": EXAMPLE_TARGET_JSON,
        "edges": dict(EXAMPLE_EDGE_MAP),
    }
