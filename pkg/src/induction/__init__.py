"""
Induction - decision tree from the function features to the form class.
"""
from src.induction.tree import (
    CLASS_ORDER, LeafNode, SplitNode, Prediction, DecisionTree,
    enumerate_nodes, predict, describe_tree
)
from src.induction.learner import (
    TrainingInstance, training_instances,
    entropy, information_gain, split_information, gain_ratio,
    induce, training_accuracy
)
from src.induction.serialization import serialize, deserialize, save_tree, load_tree

__all__ = [
    "CLASS_ORDER",
    "LeafNode",
    "SplitNode",
    "Prediction",
    "DecisionTree",
    "enumerate_nodes",
    "predict",
    "describe_tree",
    "TrainingInstance",
    "training_instances",
    "entropy",
    "information_gain",
    "split_information",
    "gain_ratio",
    "induce",
    "training_accuracy",
    "serialize",
    "deserialize",
    "save_tree",
    "load_tree",
]
