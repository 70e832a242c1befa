"""
Tests for reading and writing tree files.
"""
import itertools

import pytest

from src.annotation.schema import Awareness, FormClass, Intentionality
from src.induction import deserialize, load_tree, predict, save_tree, serialize
from src.utils.errors import TreeParseError

FIXTURE_TREE_TEXT = (
    "node 0 split awareness 1 4\n"
    "node 1 split intentionality 2 3\n"
    "node 2 leaf DONT 3 0\n"
    "node 3 leaf NEG_TC 0 32\n"
    "node 4 split intentionality 5 6\n"
    "node 5 leaf DONT 58 0\n"
    "node 6 leaf DONT 45 27\n"
)


def test_serialized_text(fixture_tree):
    assert serialize(fixture_tree) == FIXTURE_TREE_TEXT


def test_round_trip(tmp_path, fixture_tree):
    path = save_tree(fixture_tree, tmp_path / "trees" / "tree.txt")
    assert load_tree(path) == fixture_tree
    assert serialize(deserialize(serialize(fixture_tree))) == serialize(fixture_tree)


def test_records_may_come_in_any_order(fixture_tree):
    shuffled = "\n".join(reversed(FIXTURE_TREE_TEXT.splitlines())) + "\n"
    assert deserialize(shuffled) == fixture_tree


def test_comments_and_blank_lines(fixture_tree):
    text = "# induced from the agreed subset\n\n" + FIXTURE_TREE_TEXT.replace("node 4", "\nnode 4")
    assert deserialize(text.encode("utf-8")) == fixture_tree


def test_truncated_file_names_the_branch():
    truncated = "".join(FIXTURE_TREE_TEXT.splitlines(keepends=True)[:-1])
    with pytest.raises(TreeParseError) as excinfo:
        deserialize(truncated)
    assert excinfo.value.node_path == "root/awareness=UNAW/intentionality=UNC"
    assert "node 6" in str(excinfo.value)


def test_hand_written_single_leaf(fixtures_dir):
    tree = load_tree(fixtures_dir / "single_leaf_tree.txt")
    for intentionality, awareness in itertools.product(Intentionality, Awareness):
        assert predict(tree, intentionality, awareness).label is FormClass.NEG_TC


@pytest.mark.parametrize("text, fragment", [
    ("", "no node records"),
    ("node 1 leaf DONT 1 0\n", "root node 0 is missing"),
    ("node 0 leaf MAYBE 1 0\n", "unknown leaf label"),
    ("node 0 leaf DONT 1\n", "needs 3 fields"),
    ("node 0 leaf DONT one 0\n", "not a non-negative integer"),
    ("node 0 fork awareness 1 2\n", "unknown node kind"),
    ("leaf 0 DONT 1 0\n", "expected 'node <id> <kind>"),
    ("node 0 split form 1 2\nnode 1 leaf DONT 1 0\nnode 2 leaf NEG_TC 0 1\n", "unknown split feature"),
    ("node 0 leaf DONT 1 0\nnode 0 leaf NEG_TC 0 1\n", "defined twice"),
])
def test_malformed_records(text, fragment):
    with pytest.raises(TreeParseError) as excinfo:
        deserialize(text)
    assert fragment in str(excinfo.value)


def test_repeated_feature_on_a_path():
    text = (
        "node 0 split awareness 1 2\n"
        "node 1 split awareness 3 4\n"
        "node 2 leaf DONT 1 0\n"
        "node 3 leaf DONT 1 0\n"
        "node 4 leaf NEG_TC 0 1\n"
    )
    with pytest.raises(TreeParseError) as excinfo:
        deserialize(text)
    assert excinfo.value.node_path == "root/awareness=AW"


def test_cycle_is_rejected():
    text = "node 0 split awareness 1 0\nnode 1 leaf DONT 1 0\n"
    with pytest.raises(TreeParseError, match="reachable twice"):
        deserialize(text)


def test_unreachable_node_is_rejected():
    text = "node 0 leaf DONT 1 0\nnode 7 leaf NEG_TC 0 1\n"
    with pytest.raises(TreeParseError, match=r"\[7\]"):
        deserialize(text)


def test_non_utf8_bytes():
    with pytest.raises(TreeParseError, match="not UTF-8"):
        deserialize(b"node 0 leaf DONT 1 0\n\xff\n")


def test_missing_file(tmp_path):
    with pytest.raises(TreeParseError, match="not found"):
        load_tree(tmp_path / "absent.txt")
