"""
Top-down induction of the feature -> form decision tree.

Splits are chosen by information gain ratio (gain / split information, in
bits) among features with positive gain. A node becomes a leaf when it is
pure, when no feature is left, or when no feature has positive gain. Leaves
take the weighted majority class; ties go to the globally more frequent
class, then to DONT. No pruning is applied.
"""
import math
from collections import OrderedDict
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field

from src.annotation.models import AgreedExample
from src.annotation.schema import FEATURES, FUNCTION_FEATURES, Awareness, FormClass, Intentionality
from src.induction.tree import CLASS_ORDER, DecisionTree, LeafNode, Node, SplitNode, predict
from src.utils.errors import InvalidArgumentError
from src.utils.logger import get_logger

logger = get_logger(__name__)

GAIN_EPSILON = 1e-12


class TrainingInstance(BaseModel):
    """A feature pair with its label; ``weight`` counts collapsed duplicates."""

    model_config = ConfigDict(frozen=True)

    intentionality: Intentionality
    awareness: Awareness
    label: FormClass
    weight: int = Field(default=1, ge=1)


def training_instances(subset: Sequence[AgreedExample]) -> List[TrainingInstance]:
    """Collapse agreed examples into weighted instances, in enum order."""
    weights: Dict[Tuple[Intentionality, Awareness, FormClass], int] = {}
    for example in subset:
        key = (example.intentionality, example.awareness, example.form)
        weights[key] = weights.get(key, 0) + 1

    order = {member: i for enum in (Intentionality, Awareness, FormClass) for i, member in enumerate(enum)}
    return [
        TrainingInstance(intentionality=i, awareness=a, label=f, weight=w)
        for (i, a, f), w in sorted(weights.items(), key=lambda kv: tuple(order[m] for m in kv[0]))
    ]


def entropy(counts: Sequence[float]) -> float:
    """Shannon entropy in bits of a count vector (zero counts ignored)."""
    total = float(sum(counts))
    if total <= 0:
        return 0.0
    result = 0.0
    for count in counts:
        if count > 0:
            p = count / total
            result -= p * math.log2(p)
    return result


def information_gain(branch_counts: Sequence[Sequence[float]]) -> float:
    """
    Gain of a split, given the class counts of each branch.

    Args:
        branch_counts: one class-count vector per feature value
    """
    parent = [sum(column) for column in zip(*branch_counts)]
    total = float(sum(parent))
    if total <= 0:
        return 0.0
    remainder = sum((sum(branch) / total) * entropy(branch) for branch in branch_counts)
    return entropy(parent) - remainder


def split_information(branch_counts: Sequence[Sequence[float]]) -> float:
    """Entropy of the branch-size distribution."""
    return entropy([sum(branch) for branch in branch_counts])


def gain_ratio(branch_counts: Sequence[Sequence[float]]) -> float:
    """Information gain divided by split information (0 when the split is trivial)."""
    split_info = split_information(branch_counts)
    if split_info <= 0:
        return 0.0
    return information_gain(branch_counts) / split_info


def _class_counts(instances: Sequence[TrainingInstance]) -> List[int]:
    counts = [0, 0]
    for instance in instances:
        counts[CLASS_ORDER.index(instance.label)] += instance.weight
    return counts


def _branch_counts(instances: Sequence[TrainingInstance], feature: str) -> "OrderedDict[str, List[TrainingInstance]]":
    branches: "OrderedDict[str, List[TrainingInstance]]" = OrderedDict(
        (value, []) for value in FEATURES[feature].__members__
    )
    for instance in instances:
        branches[getattr(instance, feature).value].append(instance)
    return branches


class _Learner:
    """Holds the global class ordering used for tie-breaks during one induction run."""

    def __init__(self, instances: Sequence[TrainingInstance]):
        global_counts = _class_counts(instances)
        # More frequent first; CLASS_ORDER (DONT first) breaks equal totals
        self.preference = sorted(
            range(len(CLASS_ORDER)), key=lambda i: (-global_counts[i], i)
        )

    def majority(self, counts: Sequence[int]) -> FormClass:
        best = max(counts)
        for i in self.preference:
            if counts[i] == best:
                return CLASS_ORDER[i]
        return CLASS_ORDER[self.preference[0]]

    def best_split(
        self,
        instances: Sequence[TrainingInstance],
        features: Sequence[str]
    ) -> Optional[str]:
        best_feature, best_ratio = None, 0.0
        for feature in features:
            branches = _branch_counts(instances, feature)
            counts = [_class_counts(branch) for branch in branches.values()]
            if information_gain(counts) <= GAIN_EPSILON:
                continue
            ratio = gain_ratio(counts)
            logger.debug(f"  {feature}: gain ratio {ratio:.6f}")
            if best_feature is None or ratio > best_ratio:
                best_feature, best_ratio = feature, ratio
        return best_feature

    def grow(
        self,
        instances: Sequence[TrainingInstance],
        features: Sequence[str],
        fallback: FormClass
    ) -> Node:
        counts = _class_counts(instances)
        if sum(counts) == 0:
            # Empty branch inherits the parent's majority
            return LeafNode(label=fallback, counts=(0, 0))

        label = self.majority(counts)
        if min(counts) == 0 or not features:
            return LeafNode(label=label, counts=tuple(counts))

        feature = self.best_split(instances, features)
        if feature is None:
            return LeafNode(label=label, counts=tuple(counts))

        remaining = [f for f in features if f != feature]
        children = tuple(
            self.grow(branch, remaining, label)
            for branch in _branch_counts(instances, feature).values()
        )
        return SplitNode(feature=feature, children=children)


def induce(instances: Sequence[TrainingInstance]) -> DecisionTree:
    """
    Learn a tree mapping (intentionality, awareness) to a form class.

    Raises:
        InvalidArgumentError: empty training set
    """
    if not instances:
        raise InvalidArgumentError("cannot induce a tree from an empty training set")

    learner = _Learner(instances)
    root = learner.grow(list(instances), list(FUNCTION_FEATURES), learner.majority(_class_counts(instances)))
    tree = DecisionTree(root=root)
    logger.info(
        f"Induced tree with {sum(1 for _ in tree.leaves())} leaves "
        f"from {tree.training_size} weighted examples"
    )
    return tree


def training_accuracy(tree: DecisionTree, instances: Sequence[TrainingInstance]) -> float:
    """Weighted share of instances the tree labels correctly."""
    total = sum(instance.weight for instance in instances)
    if total == 0:
        raise InvalidArgumentError("cannot score an empty training set")
    correct = sum(
        instance.weight
        for instance in instances
        if predict(tree, instance.intentionality, instance.awareness).label == instance.label
    )
    return correct / total


__all__ = [
    "TrainingInstance",
    "training_instances",
    "entropy",
    "information_gain",
    "split_information",
    "gain_ratio",
    "induce",
    "training_accuracy",
]
