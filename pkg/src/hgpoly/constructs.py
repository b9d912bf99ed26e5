"""Construct trees naming the faces of a hypergraph polytope.

A construct of a connected hypergraph picks a non-empty root decoration Y,
splits the rest of the carrier into the connected components it leaves, and
recurses into each. Constructions (all decorations singletons) name the
vertices. Three independent implementations of the face order are kept
deliberately separate so their agreement can be tested.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import product

from .hypergraph import GuardExceeded, Hypergraph, HypergraphError, is_connected


class ConstructError(ValueError):
    """A raw tree is not a construct of the given hypergraph."""


@dataclass(frozen=True)
class Construct:
    decoration: frozenset[str]
    children: tuple["Construct | Omega", ...] = ()

    @cached_property
    def span(self) -> frozenset[str]:
        # union of the non-Omega decorations in the subtree
        out = set(self.decoration)
        for c in self.children:
            out |= c.span
        return frozenset(out)

    @cached_property
    def node_count(self) -> int:
        return 1 + sum(c.node_count for c in self.children)

    @cached_property
    def is_construction(self) -> bool:
        return len(self.decoration) == 1 and all(
            isinstance(c, Construct) and c.is_construction for c in self.children
        )

    def nodes(self):
        yield self
        for c in self.children:
            if isinstance(c, Construct):
                yield from c.nodes()

    def omega_leaves(self):
        for c in self.children:
            if isinstance(c, Omega):
                yield c
            else:
                yield from c.omega_leaves()


@dataclass(frozen=True)
class Omega:
    """Undefined leaf standing for a yet-unbuilt subtree over `carried`."""

    carried: frozenset[str]

    @property
    def span(self) -> frozenset[str]:
        return frozenset()

    @property
    def node_count(self) -> int:
        return 0


def _sort_atoms(node: Construct | Omega) -> frozenset[str]:
    return node.carried if isinstance(node, Omega) else node.span


def make_node(
    h: Hypergraph,
    decoration,
    children: tuple[Construct | Omega, ...] | list = (),
) -> Construct:
    """Build a node with children in canonical order (least atom of the
    atoms they cover, in carrier order)."""
    kids = tuple(sorted(children, key=lambda c: min(map(h._index.__getitem__, _sort_atoms(c)))))
    return Construct(frozenset(decoration), kids)


# -- text syntax -------------------------------------------------------


def print_atom_set(h: Hypergraph, atoms) -> str:
    names = h.sorted_labels(atoms)
    if len(names) == 1:
        return names[0]
    return "{" + ",".join(names) + "}"


def print_construct(h: Hypergraph, t: Construct | Omega) -> str:
    if isinstance(t, Omega):
        return "?" + print_atom_set(h, t.carried)
    s = print_atom_set(h, t.decoration)
    if t.children:
        s += "(" + ",".join(print_construct(h, c) for c in t.children) + ")"
    return s


def _tokenize(text: str) -> list[str]:
    tokens: list[str] = []
    buf = ""
    for ch in text:
        if ch.isspace():
            if buf:
                tokens.append(buf)
                buf = ""
        elif ch in "{}(),":
            if buf:
                tokens.append(buf)
                buf = ""
            tokens.append(ch)
        else:
            buf += ch
    if buf:
        tokens.append(buf)
    return tokens


def parse_construct(h: Hypergraph, text: str) -> Construct:
    """Parse construct text `{x,y}(z(u),v)`; singleton braces are
    optional and whitespace is ignored. The result is validated against h."""
    tokens = _tokenize(text)
    pos = 0

    def peek() -> str | None:
        return tokens[pos] if pos < len(tokens) else None

    def take(expected: str | None = None) -> str:
        nonlocal pos
        if pos >= len(tokens):
            raise ConstructError(f"unexpected end of input in {text!r}")
        tok = tokens[pos]
        if expected is not None and tok != expected:
            raise ConstructError(f"expected {expected!r}, found {tok!r} in {text!r}")
        pos += 1
        return tok

    def parse_set() -> frozenset[str]:
        if peek() == "{":
            take("{")
            atoms = [take()]
            while peek() == ",":
                take(",")
                atoms.append(take())
            take("}")
        else:
            atoms = [take()]
        for a in atoms:
            if a in "{}(),":
                raise ConstructError(f"bad atom {a!r} in {text!r}")
        return frozenset(atoms)

    def parse_node() -> Construct:
        dec = parse_set()
        kids: list[Construct] = []
        if peek() == "(":
            take("(")
            kids.append(parse_node())
            while peek() == ",":
                take(",")
                kids.append(parse_node())
            take(")")
        return Construct(dec, tuple(kids))

    tree = parse_node()
    if pos != len(tokens):
        raise ConstructError(f"trailing input {tokens[pos:]} in {text!r}")
    return validate_construct(h, tree)


# -- validation and enumeration ---------------------------------------


def validate_construct(h: Hypergraph, t: Construct) -> Construct:
    """Check the inductive definition against h and return the canonical
    form. Raises ConstructError at the first offending node."""

    def rec(node: Construct, ambient: int) -> Construct:
        if not isinstance(node, Construct):
            raise ConstructError("Omega leaf in a plain construct")
        if not node.decoration:
            raise ConstructError("empty decoration")
        try:
            dec = h.mask(node.decoration)
        except HypergraphError as err:
            raise ConstructError(str(err)) from None
        if dec & ~ambient:
            extra = h.sorted_labels(dec & ~ambient)
            raise ConstructError(
                f"decoration {print_atom_set(h, node.decoration)} leaves its component (atoms {extra})"
            )
        comps = h.components_mask(ambient & ~dec)
        spans = [h.mask(c.span) for c in node.children]
        if sorted(spans) != sorted(comps):
            want = [print_atom_set(h, h.labels(c)) for c in comps]
            got = [print_atom_set(h, h.labels(s)) for s in spans]
            raise ConstructError(
                f"children of {print_atom_set(h, node.decoration)} span {got}, "
                f"expected the components {want}"
            )
        by_span = {h.mask(c.span): c for c in node.children}
        return make_node(h, node.decoration, [rec(by_span[c], c) for c in comps])

    if not is_connected(h):
        raise ConstructError("ambient hypergraph is disconnected")
    return rec(t, h.full_mask)


def _check_guard(h: Hypergraph, max_carrier: int | None) -> None:
    if max_carrier is not None and len(h.carrier) > max_carrier:
        raise GuardExceeded(
            f"carrier has {len(h.carrier)} atoms, guard is {max_carrier}; "
            "raise the guard explicitly to enumerate"
        )


def _sort_key(h: Hypergraph):
    return lambda t: (t.node_count, print_construct(h, t))


def enumerate_constructs(h: Hypergraph, *, max_carrier: int | None = 8) -> list[Construct]:
    """All constructs of h, each once, in deterministic order."""
    _check_guard(h, max_carrier)
    if not is_connected(h):
        raise HypergraphError("constructs require a connected hypergraph")
    memo: dict[int, list[Construct]] = {}

    def rec(mask: int) -> list[Construct]:
        got = memo.get(mask)
        if got is not None:
            return got
        out: list[Construct] = []
        y = mask
        while y:
            comps = h.components_mask(mask & ~y)
            for combo in product(*(rec(c) for c in comps)):
                out.append(make_node(h, h.labels(y), combo))
            y = (y - 1) & mask
        memo[mask] = out
        return out

    return sorted(rec(h.full_mask), key=_sort_key(h))


def enumerate_constructions(h: Hypergraph, *, max_carrier: int | None = 8) -> list[Construct]:
    """All constructions (every decoration a singleton)."""
    _check_guard(h, max_carrier)
    if not is_connected(h):
        raise HypergraphError("constructions require a connected hypergraph")
    memo: dict[int, list[Construct]] = {}

    def rec(mask: int) -> list[Construct]:
        got = memo.get(mask)
        if got is not None:
            return got
        out: list[Construct] = []
        m = mask
        while m:
            bit = m & -m
            comps = h.components_mask(mask & ~bit)
            for combo in product(*(rec(c) for c in comps)):
                out.append(make_node(h, h.labels(bit), combo))
            m &= m - 1
        memo[mask] = out
        return out

    return sorted(rec(h.full_mask), key=_sort_key(h))


# -- the face order, three ways ----------------------------------------


def covers(h: Hypergraph, s: Construct) -> list[Construct]:
    """All constructs obtained by contracting exactly one tree edge of s
    (merge a child's decoration into its parent's)."""
    out: list[Construct] = []

    def rec(node: Construct) -> list[Construct]:
        results = []
        for i, child in enumerate(node.children):
            rest = node.children[:i] + node.children[i + 1 :]
            merged = make_node(h, node.decoration | child.decoration, rest + child.children)
            results.append(merged)
            for sub in rec(child):
                results.append(make_node(h, node.decoration, rest + (sub,)))
        return results

    seen = set()
    for t in rec(s):
        if t not in seen:
            seen.add(t)
            out.append(t)
    return sorted(out, key=_sort_key(h))


@lru_cache(maxsize=1 << 16)
def _covers_cached(h: Hypergraph, s: Construct) -> tuple[Construct, ...]:
    return tuple(covers(h, s))


def _leq_rules(h: Hypergraph, s: Construct, t: Construct) -> bool:
    # reachability along single-edge contractions
    if s == t:
        return True
    target_nodes = t.node_count
    frontier = {s}
    seen = {s}
    while frontier:
        nxt = set()
        for u in frontier:
            if u.node_count <= target_nodes:
                continue
            for v in _covers_cached(h, u):
                if v == t:
                    return True
                if v not in seen:
                    seen.add(v)
                    nxt.add(v)
        frontier = nxt
    return False


def _leq_v2(h: Hypergraph, s: Construct, t: Construct, memo: dict) -> bool:
    # direct two-clause recursion on the pair
    key = (s, t)
    got = memo.get(key)
    if got is not None:
        return got
    result = True
    if s.decoration - t.decoration:
        result = False
    else:
        xmask = h.mask(t.decoration)
        t_kids = {h.mask(c.span): c for c in t.children}
        for s_child in s.children:
            kmask = h.mask(s_child.span)
            inside = {m: c for m, c in t_kids.items() if not m & ~kmask}
            inter = kmask & xmask
            if inter == 0:
                # the whole component sits beside the larger decoration
                if len(inside) != 1 or next(iter(inside)) != kmask:
                    result = False
                    break
                if not _leq_v2(h, s_child, next(iter(inside.values())), memo):
                    result = False
                    break
            else:
                target = make_node(h, h.labels(inter), tuple(inside.values()))
                if not _leq_v2(h, s_child, target, memo):
                    result = False
                    break
    memo[key] = result
    return result


def _leq_v3(h: Hypergraph, s: Construct, t: Construct) -> bool:
    # cut s along the decoration of t's root; the cut prefix must be a
    # spanning partial construct and the hanging subtrees must sit below
    # t's children component by component
    if len(t.decoration) == len(s.span) and t.decoration == s.span:
        return True  # one-node maximum of this component
    x = t.decoration
    prefix_spans: dict[frozenset[str], Construct] = {}

    def cut(node: Construct) -> bool:
        # True iff node belongs to the prefix; collects hanging subtrees
        if node.decoration & x:
            if node.decoration - x:
                return False
            for child in node.children:
                if isinstance(child, Omega):
                    return False
                if child.span & x:
                    if not cut(child):
                        return False
                else:
                    prefix_spans[child.span] = child
            return True
        return False

    if s.decoration - x or not cut(s):
        return False
    # the prefix decorations must exhaust x
    hung = frozenset().union(*prefix_spans) if prefix_spans else frozenset()
    if s.span - hung != x:
        return False
    t_kids = {c.span: c for c in t.children}
    if set(prefix_spans) != set(t_kids):
        return False
    return all(_leq_v3(h, prefix_spans[k], t_kids[k]) for k in t_kids)


def leq(s: Construct, t: Construct, h: Hypergraph, variant: str = "v2") -> bool:
    """Face order: s is a face of t. Variants are independent
    implementations that must agree."""
    if s.span != t.span:
        raise ConstructError("constructs of different carriers are incomparable")
    if variant == "rules":
        return _leq_rules(h, s, t)
    if variant == "v2":
        return _leq_v2(h, s, t, {})
    if variant == "v3":
        return _leq_v3(h, s, t)
    raise ValueError(f"unknown variant {variant!r}")


# -- partial constructs and vertices -----------------------------------


def span(p: Construct | Omega) -> frozenset[str]:
    """Union of the non-Omega decorations."""
    return p.span


def rewrite_step(h: Hypergraph, p: Construct | Omega, x: str, target) -> Construct:
    """Grow the spanned set by one atom of target: the Omega leaf holding x
    is replaced by x with fresh Omega leaves for the parts it separates."""
    tmask = h.mask(target)
    xbit = h.mask([x])
    if not xbit & tmask or xbit & h.mask(p.span):
        raise ConstructError(f"atom {x!r} is not in target minus span")

    def expand(k: frozenset[str]) -> Construct:
        kmask = h.mask(k)
        parts = h.components_mask(kmask & ~xbit)
        return make_node(h, {x}, tuple(Omega(h.labels(m)) for m in parts))

    if isinstance(p, Omega):
        if x not in p.carried:
            raise ConstructError(f"atom {x!r} lies in no Omega leaf")
        return expand(p.carried)

    replaced = False

    def rec(node: Construct) -> Construct:
        nonlocal replaced
        kids = []
        for c in node.children:
            if isinstance(c, Omega) and x in c.carried:
                kids.append(expand(c.carried))
                replaced = True
            elif isinstance(c, Construct):
                kids.append(rec(c))
            else:
                kids.append(c)
        return make_node(h, node.decoration, kids)

    out = rec(p)
    if not replaced:
        raise ConstructError(f"atom {x!r} lies in no Omega leaf")
    return out


def spanning_partial_constructions(h: Hypergraph, x) -> list[Construct]:
    """All rewriting normal forms from the bare Omega over the carrier:
    the partial constructions spanning exactly x."""
    xmask = h.mask(x)
    if xmask == 0:
        raise HypergraphError("x must be non-empty")
    states: set[Construct | Omega] = {Omega(h.labels(h.full_mask))}
    todo = h.labels(xmask)
    for _ in range(len(todo)):
        nxt: set[Construct] = set()
        for p in states:
            for a in todo - p.span:
                nxt.add(rewrite_step(h, p, a, todo))
        states = nxt
    return sorted(states, key=_sort_key(h))


def vertices_below(h: Hypergraph, t: Construct) -> list[Construct]:
    """All constructions V with V <= t, built by replacing every node of t
    with a spanning partial construction and grafting recursively."""

    def graft(p: Construct, pick: dict[frozenset[str], Construct]) -> Construct:
        kids = [
            pick[c.carried] if isinstance(c, Omega) else graft(c, pick)
            for c in p.children
        ]
        return make_node(h, p.decoration, kids)

    def rec(node: Construct, ambient: int) -> list[Construct]:
        sub_h = h if ambient == h.full_mask else _restriction(h, ambient)
        skeletons = spanning_partial_constructions(sub_h, node.decoration)
        child_sets = {
            c.span: rec(c, h.mask(c.span)) for c in node.children
        }
        out = []
        for skel in skeletons:
            lifted = _lift(h, skel)
            keys = sorted(child_sets, key=lambda k: min(map(h._index.__getitem__, k)))
            for combo in product(*(child_sets[k] for k in keys)):
                out.append(graft(lifted, dict(zip(keys, combo))))
        return out

    seen: set[Construct] = set()
    result = []
    for v in rec(t, h.mask(t.span)):
        if v not in seen:
            seen.add(v)
            result.append(v)
    return sorted(result, key=_sort_key(h))


def _restriction(h: Hypergraph, mask: int) -> Hypergraph:
    from .hypergraph import restrict

    return restrict(h, h.sorted_labels(mask))


def _lift(h: Hypergraph, p: Construct | Omega) -> Construct | Omega:
    # rebuild a partial construction of a restriction as a tree over h's
    # canonical child order (atom sets are unchanged)
    if isinstance(p, Omega):
        return p
    return make_node(h, p.decoration, [_lift(h, c) for c in p.children])
