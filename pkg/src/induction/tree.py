"""
Decision tree over the two function features, predicting the form class.
"""
from typing import Annotated, Dict, Iterator, List, Literal, NamedTuple, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.annotation.schema import FEATURES, FUNCTION_FEATURES, Awareness, FormClass, Intentionality
from src.utils.errors import InvalidArgumentError

CLASS_ORDER: Tuple[FormClass, FormClass] = (FormClass.DONT, FormClass.NEG_TC)


class LeafNode(BaseModel):
    """Leaf with its label and the (DONT, NEG_TC) training weights routed to it."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["leaf"] = "leaf"
    label: FormClass
    counts: Tuple[int, int] = (0, 0)

    @property
    def total(self) -> int:
        return sum(self.counts)

    @property
    def confidence(self) -> float:
        if self.total == 0:
            return 0.0
        return self.counts[CLASS_ORDER.index(self.label)] / self.total


class SplitNode(BaseModel):
    """Internal node; ``children`` follow the feature's enum value order."""

    model_config = ConfigDict(frozen=True)

    kind: Literal["split"] = "split"
    feature: str
    children: Tuple["Node", "Node"]

    @field_validator("feature")
    @classmethod
    def _function_feature(cls, value: str) -> str:
        if value not in FUNCTION_FEATURES:
            raise ValueError(f"split feature must be one of {list(FUNCTION_FEATURES)}, got '{value}'")
        return value

    def values(self) -> List[str]:
        return list(FEATURES[self.feature].__members__)

    def child_for(self, value: str) -> "Node":
        return self.children[self.values().index(value)]


Node = Annotated[Union[LeafNode, SplitNode], Field(discriminator="kind")]
SplitNode.model_rebuild()


class Prediction(NamedTuple):
    label: FormClass
    confidence: float


class DecisionTree(BaseModel):
    """Immutable induced tree; safe to share between threads."""

    model_config = ConfigDict(frozen=True)

    root: Node

    def leaves(self) -> Iterator[LeafNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            if isinstance(node, LeafNode):
                yield node
            else:
                stack.extend(reversed(node.children))

    @property
    def training_size(self) -> int:
        return sum(leaf.total for leaf in self.leaves())

    def majority_margins(self) -> Dict[int, float]:
        """Preorder node id -> (majority - minority) / weight for every leaf with weight."""
        margins: Dict[int, float] = {}
        for node_id, node in enumerate_nodes(self):
            if isinstance(node, LeafNode) and node.total:
                margins[node_id] = abs(node.counts[0] - node.counts[1]) / node.total
        return margins


def enumerate_nodes(tree: DecisionTree) -> List[Tuple[int, "Node"]]:
    """Nodes with preorder ids; the root is node 0."""
    ordered: List[Tuple[int, Node]] = []

    def visit(node: Node) -> None:
        ordered.append((len(ordered), node))
        if isinstance(node, SplitNode):
            for child in node.children:
                visit(child)

    visit(tree.root)
    return ordered


def _coerce(value: Union[str, Intentionality, Awareness], enum) -> str:
    token = value.value if hasattr(value, "value") else str(value)
    if token not in enum.__members__:
        raise InvalidArgumentError(f"'{token}' is not a valid {enum.__name__} value")
    return token


def predict(
    tree: DecisionTree,
    intentionality: Union[str, Intentionality],
    awareness: Union[str, Awareness]
) -> Prediction:
    """
    Route a feature pair to its leaf.

    Returns:
        Leaf label and confidence (majority weight / leaf weight)
    """
    values = {
        "intentionality": _coerce(intentionality, Intentionality),
        "awareness": _coerce(awareness, Awareness),
    }
    node = tree.root
    while isinstance(node, SplitNode):
        node = node.child_for(values[node.feature])
    return Prediction(node.label, node.confidence)


def _leaf_text(node: LeafNode) -> str:
    return f"-> {node.label.value} ({node.counts[0]} DONT / {node.counts[1]} NEG_TC)"


def describe_tree(tree: DecisionTree) -> str:
    """Indented text rendering, one line per branch."""
    if isinstance(tree.root, LeafNode):
        return _leaf_text(tree.root) + "\n"

    lines: List[str] = []

    def visit(node: SplitNode, depth: int) -> None:
        indent = "  " * depth
        for value, child in zip(node.values(), node.children):
            if isinstance(child, LeafNode):
                lines.append(f"{indent}{node.feature} = {value} {_leaf_text(child)}")
            else:
                lines.append(f"{indent}{node.feature} = {value}")
                visit(child, depth + 1)

    visit(tree.root, 0)
    return "\n".join(lines) + "\n"


__all__ = [
    "CLASS_ORDER",
    "LeafNode",
    "SplitNode",
    "Node",
    "Prediction",
    "DecisionTree",
    "enumerate_nodes",
    "predict",
    "describe_tree",
]
