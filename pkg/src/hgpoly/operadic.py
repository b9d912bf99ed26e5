"""Rooted operation trees and their derived edge graphs.

The edges of a labeled rooted tree form a hypergraph: one atom per edge,
a pair hyperedge whenever two tree edges share a node. Pairs are tagged
solid (stacked edges) or dashed (sibling edges) and stratified by level;
the tags sit beside the plain hypergraph, which the construct and
realization machinery consumes unchanged. On the polytope of that
hypergraph, every edge either rebrackets one association step (beta,
oriented by level) or swaps two independent ones (theta, undirected).
The decision runs on the min-path between the two merged atoms, computed
both by breadth-first search and by a four-rule path rewriting system.
Constructions correspond to fully parenthesised merge words over the
tree's node labels, with the parent-side block printed on the left.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .constructs import (
    Construct,
    enumerate_constructs,
    enumerate_constructions,
    make_node,
    print_construct,
    validate_construct,
    vertices_below,
)
from .hypergraph import Hypergraph, components


class OperadicTreeError(ValueError):
    """Input data violates a tree or edge-graph invariant."""


class WordError(ValueError):
    """A parenthesised word is not admissible for the tree at hand."""


@dataclass(frozen=True)
class OperadicTree:
    """Rooted tree with pairwise distinct node labels; children unordered
    (stored sorted by label)."""

    label: str
    children: tuple[OperadicTree, ...] = ()

    def __post_init__(self) -> None:
        if not isinstance(self.label, str) or not self.label:
            raise OperadicTreeError("node labels must be non-empty strings")
        kids = tuple(sorted(self.children, key=lambda c: c.label))
        object.__setattr__(self, "children", kids)
        seen: set[str] = set()
        for node in self.nodes():
            if node.label in seen:
                raise OperadicTreeError(f"duplicate node label {node.label!r}")
            seen.add(node.label)

    def nodes(self):
        yield self
        for child in self.children:
            yield from child.nodes()

    @cached_property
    def labels(self) -> frozenset[str]:
        return frozenset(n.label for n in self.nodes())

    def edges(self) -> tuple[tuple[str, str], ...]:
        """(parent label, child label) pairs, preorder."""
        out: list[tuple[str, str]] = []
        for node in self.nodes():
            for child in node.children:
                out.append((node.label, child.label))
        return tuple(out)

    @property
    def edge_count(self) -> int:
        return len(self.labels) - 1

    @property
    def is_non_empty(self) -> bool:
        return bool(self.children)

    def to_json_dict(self) -> dict:
        def rec(node: OperadicTree) -> dict:
            return {"label": node.label, "children": [rec(c) for c in node.children]}

        return {"format": 1, **rec(self)}


def tree_from_json_dict(data: dict) -> OperadicTree:
    if not isinstance(data, dict):
        raise OperadicTreeError("tree JSON must be an object")
    if data.get("format", 1) != 1:
        raise OperadicTreeError("unsupported format version")

    def rec(node) -> OperadicTree:
        if not isinstance(node, dict) or "label" not in node:
            raise OperadicTreeError("tree node must be an object with a label")
        children = node.get("children", [])
        if not isinstance(children, list):
            raise OperadicTreeError("children must be a list")
        return OperadicTree(node["label"], tuple(rec(c) for c in children))

    return rec(data)


def parse_tree(text: str) -> OperadicTree:
    """Parse `a(b(c,d),e)` notation."""
    pos = 0

    def label() -> str:
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos] not in "(),":
            pos += 1
        name = text[start:pos].strip()
        if not name:
            raise OperadicTreeError(f"expected a label at position {start}")
        return name

    def node() -> OperadicTree:
        nonlocal pos
        name = label()
        kids: list[OperadicTree] = []
        if pos < len(text) and text[pos] == "(":
            pos += 1
            kids.append(node())
            while pos < len(text) and text[pos] == ",":
                pos += 1
                kids.append(node())
            if pos >= len(text) or text[pos] != ")":
                raise OperadicTreeError("unbalanced parentheses in tree text")
            pos += 1
        return OperadicTree(name, tuple(kids))

    result = node()
    if pos != len(text):
        raise OperadicTreeError(f"trailing input at position {pos}")
    return result


@dataclass(frozen=True, eq=False)
class EdgeGraph:
    """The derived graph of an operadic tree, vertices named per edge.

    `hypergraph` is the plain atomic hypergraph (singletons plus adjacent
    pairs); solid/dashed tags and levels are sidecar data.
    """

    tree: OperadicTree
    hypergraph: Hypergraph
    solid: frozenset[frozenset[str]]
    dashed: frozenset[frozenset[str]]
    level: dict[str, int]
    edge_of: dict[str, str]  # vertex name -> child endpoint label in the tree

    @property
    def vertex_names(self) -> tuple[str, ...]:
        return self.hypergraph.carrier

    def kind_of(self, u: str, v: str) -> str | None:
        pair = frozenset((u, v))
        if pair in self.solid:
            return "solid"
        if pair in self.dashed:
            return "dashed"
        return None

    def neighbors(self, u: str) -> tuple[str, ...]:
        return self._adjacency[u]

    @cached_property
    def _adjacency(self) -> dict[str, tuple[str, ...]]:
        order = {a: i for i, a in enumerate(self.hypergraph.carrier)}
        out: dict[str, list[str]] = {a: [] for a in self.hypergraph.carrier}
        for pair in self.solid | self.dashed:
            u, v = tuple(pair)
            out[u].append(v)
            out[v].append(u)
        return {a: tuple(sorted(ns, key=order.__getitem__)) for a, ns in out.items()}


def build_edge_graph(
    t: OperadicTree, names: dict[str, str] | None = None
) -> EdgeGraph:
    """Derive the edge graph: one vertex per tree edge (named by child
    endpoint, or per `names`), solid pairs for stacked edges, dashed
    pairs for siblings, level = distance of the child endpoint from the
    root."""
    if not t.is_non_empty:
        raise OperadicTreeError("the tree has no edges")
    child_labels = [c for _, c in t.edges()]
    if names is None:
        names = {c: c for c in child_labels}
    else:
        if set(names) != set(child_labels):
            raise OperadicTreeError("names must cover exactly the non-root labels")
        if len(set(names.values())) != len(names):
            raise OperadicTreeError("vertex names must be pairwise distinct")
    carrier = list(names.values())  # insertion order fixes the atom order

    level: dict[str, int] = {}
    solid: set[frozenset[str]] = set()
    dashed: set[frozenset[str]] = set()

    def walk(node: OperadicTree, depth: int) -> None:
        kids = [names[c.label] for c in node.children]
        for a in kids:
            level[a] = depth + 1
        for i, a in enumerate(kids):
            for b in kids[i + 1 :]:
                dashed.add(frozenset((a, b)))
        for child in node.children:
            if node.label in names:  # node's parent edge stacks on its child edges
                solid.add(frozenset((names[node.label], names[child.label])))
            walk(child, depth + 1)

    walk(t, 0)
    edges = [[a] for a in carrier] + [sorted(p, key=carrier.index) for p in solid | dashed]
    h = Hypergraph(carrier, edges)
    return EdgeGraph(
        tree=t,
        hypergraph=h,
        solid=frozenset(solid),
        dashed=frozenset(dashed),
        level=level,
        edge_of={v: c for c, v in names.items()},
    )


@dataclass(frozen=True)
class MinPath:
    vertices: tuple[str, ...]
    path_type: str  # "I" | "II"

    @property
    def length(self) -> int:
        return len(self.vertices) - 1


def _step_kinds(g: EdgeGraph, seq: tuple[str, ...]) -> list[str]:
    """Per step: 'down' (solid toward the root), 'up' (solid away), 'd'."""
    out = []
    for a, b in zip(seq, seq[1:]):
        kind = g.kind_of(a, b)
        if kind is None:
            raise OperadicTreeError(f"{a!r} and {b!r} are not adjacent")
        if kind == "dashed":
            out.append("d")
        else:
            out.append("up" if g.level[b] == g.level[a] + 1 else "down")
    return out


def _normal_type(steps: list[str]) -> str | None:
    """Type I: all down or all up. Type II: downs, one dashed, ups."""
    if "d" not in steps:
        if all(s == "down" for s in steps) or all(s == "up" for s in steps):
            return "I"
        return None
    if steps.count("d") > 1:
        return None
    i = steps.index("d")
    if all(s == "down" for s in steps[:i]) and all(s == "up" for s in steps[i + 1 :]):
        return "II"
    return None


def normalize_path(g: EdgeGraph, p) -> MinPath:
    """Apply the four length-reducing rewrite rules until no triple
    matches; the result is the unique min-path between the endpoints."""
    seq = list(p)
    if not seq:
        raise OperadicTreeError("empty path")
    if len(set(seq)) != len(seq):
        raise OperadicTreeError("path revisits a vertex")
    _step_kinds(g, tuple(seq))  # validates adjacency
    while True:
        steps = _step_kinds(g, tuple(seq))
        for i in range(len(steps) - 1):
            pair = (steps[i], steps[i + 1])
            if pair in {("d", "d"), ("down", "up"), ("d", "down"), ("up", "d")}:
                if g.kind_of(seq[i], seq[i + 2]) is None:
                    raise RuntimeError("rewrite produced a non-edge; graph is not tree-derived")
                del seq[i + 1]
                break
        else:
            break
    kind = _normal_type(_step_kinds(g, tuple(seq)))
    if kind is None:
        raise RuntimeError("normal form is neither type I nor type II")
    return MinPath(tuple(seq), kind)


def min_path(g: EdgeGraph, u: str, v: str) -> MinPath:
    """Unique shortest path between two vertices, by breadth-first search
    cross-checked against the rewriting normal form."""
    if u == v:
        raise OperadicTreeError("min-path endpoints must differ")
    prev: dict[str, str] = {u: u}
    queue = deque([u])
    while queue:
        a = queue.popleft()
        if a == v:
            break
        for b in g.neighbors(a):
            if b not in prev:
                prev[b] = a
                queue.append(b)
    if v not in prev:
        raise OperadicTreeError(f"no path between {u!r} and {v!r}")
    seq = [v]
    while seq[-1] != u:
        seq.append(prev[seq[-1]])
    seq.reverse()
    normal = normalize_path(g, seq)
    if normal.vertices != tuple(seq):
        raise RuntimeError("shortest path is not in normal form")
    return normal


@dataclass(frozen=True, eq=False)
class EdgeClassification:
    kind: str  # "beta" | "theta"
    endpoints: tuple[Construct, Construct]
    min_path: MinPath
    source: Construct | None = None  # beta only
    target: Construct | None = None


def _is_strictly_below(v: Construct, lo: str, hi: str) -> bool:
    """True when lo's node is a proper ancestor of hi's node in v."""
    for node in v.nodes():
        if lo in node.decoration:
            return hi in node.span and hi not in node.decoration
    raise ValueError(f"atom {lo!r} not in construction")


def classify_edge(g: EdgeGraph, e: Construct) -> EdgeClassification:
    """Decide beta versus theta for a polytope edge.

    The edge merges two atoms u, v into one doubleton node. If the
    min-path between u and v is all solid, the edge is beta, oriented
    toward the endpoint construction in which the lower-level atom sits
    below the higher-level one; a dashed crossing makes it theta.
    """
    h = g.hypergraph
    e = validate_construct(h, e)
    doubletons = [n for n in e.nodes() if len(n.decoration) == 2]
    if len(doubletons) != 1 or e.node_count != len(h.carrier) - 1:
        raise OperadicTreeError("expected a construct with exactly one doubleton node")
    u, v = h.sorted_labels(doubletons[0].decoration)
    path = min_path(g, u, v)
    ends = vertices_below(h, e)
    if len(ends) != 2:
        raise RuntimeError("polytope edge does not have exactly two endpoints")
    key = _construction_sort_key(h)
    first, second = sorted(ends, key=key)
    if path.path_type == "II":
        return EdgeClassification("theta", (first, second), path)
    lo, hi = (u, v) if g.level[u] < g.level[v] else (v, u)
    if _is_strictly_below(first, lo, hi):
        source, target = second, first
    else:
        source, target = first, second
    if not _is_strictly_below(target, lo, hi) or _is_strictly_below(source, lo, hi):
        raise RuntimeError("endpoints do not split the merged pair as expected")
    return EdgeClassification("beta", (first, second), path, source, target)


def _construction_sort_key(h: Hypergraph):
    return lambda c: print_construct(h, c)


def subtree_component_correspondence(g: EdgeGraph, k) -> OperadicTree:
    """The subtree of the underlying tree whose edge set is a connected
    set of graph vertices; its own edge graph restricts back to k."""
    atoms = frozenset(k)
    h = g.hypergraph
    if not atoms:
        raise OperadicTreeError("empty vertex set")
    if not h.connected_mask(h.mask(atoms)):
        raise OperadicTreeError("vertex set is not connected in the edge graph")
    parent_of = {c: p for p, c in g.tree.edges()}
    picked = {g.edge_of[a] for a in atoms}  # child endpoints of kept edges
    nodes = picked | {parent_of[c] for c in picked}
    children: dict[str, list[str]] = {n: [] for n in nodes}
    tops = set(nodes)
    for c in picked:
        children[parent_of[c]].append(c)
        tops.discard(c)
    (root,) = tops

    def rebuild(label: str) -> OperadicTree:
        return OperadicTree(label, tuple(rebuild(c) for c in children[label]))

    return rebuild(root)


@dataclass(frozen=True)
class EdgeRemovalCensus:
    """Removing n tree edges leaves n+1 subtrees; the ones that keep an
    edge match the components of the graph minus the removed vertices."""

    subtrees: tuple[frozenset[str], ...]  # node label sets, all of them
    pairs: tuple[tuple[frozenset[str], frozenset[str]], ...]  # (node set, vertex set)

    @property
    def subtree_count(self) -> int:
        return len(self.subtrees)

    @property
    def nonempty_count(self) -> int:
        return len(self.pairs)


def edge_removal_census(g: EdgeGraph, removed) -> EdgeRemovalCensus:
    removed_atoms = frozenset(removed)
    for a in removed_atoms:
        if a not in g.edge_of:
            raise OperadicTreeError(f"{a!r} is not a vertex of the edge graph")
    cut = {g.edge_of[a] for a in removed_atoms}
    kept = [(p, c) for p, c in g.tree.edges() if c not in cut]

    blocks: dict[str, set[str]] = {n.label: {n.label} for n in g.tree.nodes()}
    for p, c in kept:
        merged = blocks[p] | blocks[c]
        for n in merged:
            blocks[n] = merged
    subtrees = {frozenset(b) for b in blocks.values()}

    vertex_of = {c: v for v, c in g.edge_of.items()}
    pairs = []
    for part in subtrees:
        inside = frozenset(vertex_of[c] for p, c in kept if p in part and c in part)
        if inside:
            pairs.append((part, inside))

    found = {frozenset(comp) for comp in components(g.hypergraph, removed_atoms)}
    if found != {vs for _, vs in pairs}:
        raise RuntimeError("graph components do not match the non-Empty subtrees")

    def part_key(s: frozenset[str]) -> tuple[str, ...]:
        return tuple(sorted(s))

    return EdgeRemovalCensus(
        tuple(sorted(subtrees, key=part_key)),
        tuple(sorted(pairs, key=lambda pc: part_key(pc[0]))),
    )


def _parse_word(text: str):
    """Letter or (left, right) pairs; accepts the outer pair dropped."""
    pos = 0

    def item():
        nonlocal pos
        if pos >= len(text):
            raise WordError("unexpected end of word")
        ch = text[pos]
        if ch == "(":
            start = pos
            pos += 1
            left = item()
            right = item()
            if pos >= len(text) or text[pos] != ")":
                raise WordError(f"expected ')' for the parenthesis at position {start}")
            pos += 1
            return (left, right)
        if ch.isalnum():
            pos += 1
            return ch
        raise WordError(f"unexpected character {ch!r} at position {pos}")

    first = item()
    if pos == len(text):
        return first
    second = item()
    if pos != len(text):
        raise WordError(f"trailing input at position {pos}")
    return (first, second)


def _word_text(w) -> str:
    if isinstance(w, str):
        return w
    return f"({_word_text(w[0])}{_word_text(w[1])})"


def word_to_construction(g: EdgeGraph, word: str) -> Construct:
    """Decode a fully parenthesised merge word into the construction it
    denotes. Each parenthesis must merge two blocks joined by a tree
    edge whose parent endpoint lies in the left block."""
    t, h = g.tree, g.hypergraph
    vertex_of = {c: v for v, c in g.edge_of.items()}
    tree_edges = t.edges()
    parsed = _parse_word(word)

    def rec(w):
        if isinstance(w, str):
            if w not in t.labels:
                raise WordError(f"letter {w!r} does not name a tree node")
            return None, frozenset((w,))
        left, right = w
        built_l, set_l = rec(left)
        built_r, set_r = rec(right)
        if set_l & set_r:
            raise WordError(f"blocks overlap in {_word_text(w)}")
        joining = [
            (p, c)
            for (p, c) in tree_edges
            if (p in set_l and c in set_r) or (p in set_r and c in set_l)
        ]
        if not joining:
            raise WordError(f"no tree edge joins the blocks of {_word_text(w)}")
        ((p, c),) = joining
        if p not in set_l:
            raise WordError(
                f"{_word_text(w)} puts the parent-side block on the right"
            )
        kids = tuple(x for x in (built_l, built_r) if x is not None)
        node = make_node(h, frozenset((vertex_of[c],)), kids)
        return node, set_l | set_r

    built, used = rec(parsed)
    if used != t.labels:
        missing = "".join(sorted(t.labels - used))
        raise WordError(f"word does not use every tree node: missing {missing}")
    return validate_construct(h, built)


def construction_to_word(g: EdgeGraph, v: Construct) -> str:
    """Encode a construction as its decomposition word, parent-side
    block on the left, outermost parentheses dropped."""
    t, h = g.tree, g.hypergraph
    v = validate_construct(h, v)
    if not v.is_construction or v.span != frozenset(h.carrier):
        raise OperadicTreeError("expected a construction spanning the whole graph")
    parent_of = {c: p for p, c in t.edges()}

    def rec(node: Construct) -> tuple[str, frozenset[str]]:
        (atom,) = node.decoration
        c = g.edge_of[atom]
        p = parent_of[c]
        left, right = None, None
        for child in node.children:
            word, labels = rec(child)
            if c in labels:
                right = (word, labels)
            elif p in labels:
                left = (word, labels)
            else:
                raise RuntimeError("child block touches neither endpoint")
        lw, ls = left if left else (p, frozenset((p,)))
        rw, rs = right if right else (c, frozenset((c,)))
        return f"({lw}{rw})", ls | rs

    word, _ = rec(v)
    return word[1:-1]


def decomposition_words(g: EdgeGraph) -> list[str]:
    """All full decomposition words, one per construction, sorted."""
    return sorted(
        construction_to_word(g, v) for v in enumerate_constructions(g.hypergraph)
    )


def skeleton_dot(g: EdgeGraph) -> str:
    """Polytope vertex-edge skeleton as DOT: beta edges directed and
    solid, theta edges undirected and dashed, vertices labeled by words."""
    h = g.hypergraph
    n = len(h.carrier)
    label = {v: construction_to_word(g, v) for v in enumerate_constructions(h)}
    lines = ["digraph skeleton {"]
    for text in sorted(label.values()):
        lines.append(f'  "{text}";')
    rows = []
    for e in enumerate_constructs(h):
        if e.node_count != n - 1:
            continue
        cls = classify_edge(g, e)
        if cls.kind == "beta":
            rows.append(f'  "{label[cls.source]}" -> "{label[cls.target]}" [label="beta"];')
        else:
            a, b = sorted(label[x] for x in cls.endpoints)
            rows.append(f'  "{a}" -> "{b}" [label="theta", dir=none, style=dashed];')
    lines.extend(sorted(rows))
    lines.append("}")
    return "\n".join(lines) + "\n"
