"""
Line-oriented tree files.

    node <id> leaf <label> <count_DONT> <count_NEG_TC>
    node <id> split <feature> <child_id_value1> <child_id_value2>

Node 0 is the root; ``serialize`` numbers nodes in preorder. Blank lines and
lines starting with ``#`` are ignored when reading.
"""
from pathlib import Path
from typing import Dict, List, Set, Tuple, Union

from src.annotation.schema import FEATURES, FUNCTION_FEATURES, FormClass
from src.induction.tree import DecisionTree, LeafNode, Node, SplitNode, enumerate_nodes
from src.utils.errors import TreeParseError
from src.utils.logger import get_logger

logger = get_logger(__name__)

Record = Tuple[str, Tuple[str, ...], int]  # kind, arguments, line number


def serialize(tree: DecisionTree) -> str:
    """Render a tree as node records, root first."""
    ids = {id(node): node_id for node_id, node in enumerate_nodes(tree)}
    lines: List[str] = []
    for node_id, node in enumerate_nodes(tree):
        if isinstance(node, LeafNode):
            lines.append(f"node {node_id} leaf {node.label.value} {node.counts[0]} {node.counts[1]}")
        else:
            children = " ".join(str(ids[id(child)]) for child in node.children)
            lines.append(f"node {node_id} split {node.feature} {children}")
    return "\n".join(lines) + "\n"


def _parse_count(token: str, path: str) -> int:
    if not token.isdigit():
        raise TreeParseError(f"leaf count '{token}' is not a non-negative integer", path)
    return int(token)


def _read_records(text: str) -> Dict[int, Record]:
    records: Dict[int, Record] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) < 3 or tokens[0] != "node" or not tokens[1].isdigit():
            raise TreeParseError(f"line {line_no}: expected 'node <id> <kind> ...', got '{line}'")
        node_id, kind, args = int(tokens[1]), tokens[2], tuple(tokens[3:])
        if kind not in ("leaf", "split"):
            raise TreeParseError(f"line {line_no}: unknown node kind '{kind}'")
        # leaf: label + two counts; split: feature + two child ids
        if len(args) != 3:
            raise TreeParseError(
                f"line {line_no}: {kind} record needs 3 fields after the kind, got {len(args)}"
            )
        if node_id in records:
            raise TreeParseError(f"line {line_no}: node {node_id} defined twice")
        records[node_id] = (kind, args, line_no)
    return records


def _build(
    node_id: int,
    records: Dict[int, Record],
    path: str,
    used: Set[int],
    features_on_path: Tuple[str, ...]
) -> Node:
    if node_id not in records:
        raise TreeParseError(f"node {node_id} is referenced but never defined (file truncated?)", path)
    if node_id in used:
        raise TreeParseError(f"node {node_id} is reachable twice", path)
    used.add(node_id)

    kind, args, line_no = records[node_id]
    if kind == "leaf":
        label, dont, neg_tc = args
        if label not in FormClass.__members__:
            raise TreeParseError(f"line {line_no}: unknown leaf label '{label}'", path)
        return LeafNode(
            label=FormClass(label),
            counts=(_parse_count(dont, path), _parse_count(neg_tc, path)),
        )

    feature, *children = args
    if feature not in FUNCTION_FEATURES:
        raise TreeParseError(f"line {line_no}: unknown split feature '{feature}'", path)
    if feature in features_on_path:
        raise TreeParseError(f"line {line_no}: feature '{feature}' repeated on one path", path)
    for child in children:
        if not child.isdigit():
            raise TreeParseError(f"line {line_no}: child id '{child}' is not a node id", path)

    values = list(FEATURES[feature].__members__)
    built = tuple(
        _build(int(child), records, f"{path}/{feature}={value}", used, features_on_path + (feature,))
        for value, child in zip(values, children)
    )
    return SplitNode(feature=feature, children=built)


def deserialize(data: Union[str, bytes]) -> DecisionTree:
    """
    Parse a tree file.

    Raises:
        TreeParseError: malformed record, missing or unreachable node, a cycle,
            or a feature repeated on a root-to-leaf path; ``node_path`` names
            the branch being read (e.g. ``root/awareness=UNAW``)
    """
    if isinstance(data, bytes):
        try:
            data = data.decode("utf-8")
        except UnicodeDecodeError as e:
            raise TreeParseError(f"tree file is not UTF-8 (byte {e.start})") from e

    records = _read_records(data)
    if not records:
        raise TreeParseError("tree file contains no node records")
    if 0 not in records:
        raise TreeParseError("root node 0 is missing", "root")

    used: Set[int] = set()
    root = _build(0, records, "root", used, ())
    unused = sorted(set(records) - used)
    if unused:
        raise TreeParseError(f"nodes {unused} are not reachable from the root")
    return DecisionTree(root=root)


def save_tree(tree: DecisionTree, path: Union[str, Path]) -> Path:
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(serialize(tree), encoding="utf-8")
    logger.info(f"Wrote tree to {path}")
    return path


def load_tree(path: Union[str, Path]) -> DecisionTree:
    """Read a tree file; a missing file is reported as a parse error naming the path."""
    path = Path(path)
    if not path.is_file():
        raise TreeParseError(f"tree file not found: {path}")
    return deserialize(path.read_bytes())


__all__ = [
    "serialize",
    "deserialize",
    "save_tree",
    "load_tree",
]
