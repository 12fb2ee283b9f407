"""Rooted tree structures used by the bijections.

Ternary trees have three ordered optional child slots (left, vertical,
right); ordered trees have an arbitrary ordered child list; favorite-child
trees additionally mark one child per parent.  All are immutable values
compared structurally, serialized to parenthesis strings.
"""

from __future__ import annotations

from functools import lru_cache


class TernaryTree:
    """Vertex with three optional subtrees.  A single vertex has none."""

    __slots__ = ("left", "vertical", "right")

    def __init__(self, left=None, vertical=None, right=None):
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "vertical", vertical)
        object.__setattr__(self, "right", right)

    def __setattr__(self, name, value):
        raise AttributeError("TernaryTree is immutable")

    def slots(self):
        return (self.left, self.vertical, self.right)

    def edges(self):
        return sum(child.edges() + 1 for child in self.slots() if child is not None)

    def edge_counts(self):
        """Total numbers of (left, vertical, right) edges in the whole tree."""
        counts = [0, 0, 0]
        for i, child in enumerate(self.slots()):
            if child is None:
                continue
            counts[i] += 1
            sub = child.edge_counts()
            for j in range(3):
                counts[j] += sub[j]
        return tuple(counts)

    def serialize(self):
        """3-slot form with '-' marking an empty slot, e.g. "(-,(-,-,-),-)"."""
        parts = ("-" if c is None else c.serialize() for c in self.slots())
        return "(" + ",".join(parts) + ")"

    @classmethod
    def parse(cls, text):
        tree, rest = cls._parse(text.strip())
        if rest:
            raise ValueError(f"trailing input {rest!r}")
        return tree

    @classmethod
    def _parse(cls, text):
        if not text.startswith("("):
            raise ValueError(f"expected '(' at {text!r}")
        text = text[1:]
        slots = []
        for i in range(3):
            if text.startswith("-"):
                slots.append(None)
                text = text[1:]
            else:
                child, text = cls._parse(text)
                slots.append(child)
            sep = "," if i < 2 else ")"
            if not text.startswith(sep):
                raise ValueError(f"expected {sep!r} at {text!r}")
            text = text[1:]
        return cls(*slots), text

    def __eq__(self, other):
        if not isinstance(other, TernaryTree):
            return NotImplemented
        return self.slots() == other.slots()

    def __hash__(self):
        return hash(("T",) + self.slots())

    def __repr__(self):
        return self.serialize()


@lru_cache(maxsize=None)
def ternary_trees(m):
    """All ternary trees with m edges, as a tuple (cached)."""
    out = []
    for wl in range(m + 1):
        for wv in range(m + 1 - wl):
            wr = m - wl - wv
            for left in _slot_options(wl):
                for vert in _slot_options(wv):
                    for right in _slot_options(wr):
                        out.append(TernaryTree(left, vert, right))
    return tuple(out)


def _slot_options(weight):
    if weight == 0:
        return (None,)
    return ternary_trees(weight - 1)


class OrderedTree:
    """Vertex with an ordered tuple of subtrees."""

    __slots__ = ("children",)

    def __init__(self, children=()):
        object.__setattr__(self, "children", tuple(children))

    def __setattr__(self, name, value):
        raise AttributeError("OrderedTree is immutable")

    def edges(self):
        return sum(child.edges() + 1 for child in self.children)

    def node_at(self, path):
        node = self
        for i in path:
            node = node.children[i]
        return node

    def all_paths(self):
        """Every vertex as a path of child indices from the root."""
        out = [()]
        stack = [((), self)]
        while stack:
            path, node = stack.pop()
            for i, child in enumerate(node.children):
                cp = path + (i,)
                out.append(cp)
                stack.append((cp, child))
        return out

    def serialize(self):
        return "(" + "".join(c.serialize() for c in self.children) + ")"

    @classmethod
    def parse(cls, text):
        tree, rest = cls._parse(text.strip())
        if rest:
            raise ValueError(f"trailing input {rest!r}")
        return tree

    @classmethod
    def _parse(cls, text):
        if not text.startswith("("):
            raise ValueError(f"expected '(' at {text!r}")
        text = text[1:]
        children = []
        while not text.startswith(")"):
            child, text = cls._parse(text)
            children.append(child)
        return cls(children), text[1:]

    def __eq__(self, other):
        if not isinstance(other, OrderedTree):
            return NotImplemented
        return self.children == other.children

    def __hash__(self):
        return hash(("O", self.children))

    def __repr__(self):
        return self.serialize()


@lru_cache(maxsize=None)
def ordered_trees(n):
    """All ordered trees with n edges (Catalan many), as a tuple (cached)."""
    if n == 0:
        return (OrderedTree(),)
    out = []
    for k in range(n):
        for first in ordered_trees(k):
            for rest in ordered_trees(n - 1 - k):
                out.append(OrderedTree((first,) + rest.children))
    return tuple(out)


class FCOrderedTree:
    """Ordered tree in which every parent marks a favorite child (1-based)."""

    __slots__ = ("children", "favorite")

    def __init__(self, children=(), favorite=None):
        children = tuple(children)
        if children and not 1 <= (favorite or 0) <= len(children):
            raise ValueError("parent needs a favorite child index in range")
        if not children and favorite is not None:
            raise ValueError("leaf cannot have a favorite child")
        object.__setattr__(self, "children", children)
        object.__setattr__(self, "favorite", favorite)

    def __setattr__(self, name, value):
        raise AttributeError("FCOrderedTree is immutable")

    def edges(self):
        return sum(child.edges() + 1 for child in self.children)

    def node_at(self, path):
        node = self
        for i in path:
            node = node.children[i]
        return node

    def underlying(self):
        return OrderedTree(tuple(c.underlying() for c in self.children))

    def serialize(self):
        """Parenthesis string with ':k' after every parent, e.g. "(()()):2"."""
        body = "(" + "".join(c.serialize() for c in self.children) + ")"
        if self.children:
            body += f":{self.favorite}"
        return body

    @classmethod
    def parse(cls, text):
        tree, rest = cls._parse(text.strip())
        if rest:
            raise ValueError(f"trailing input {rest!r}")
        return tree

    @classmethod
    def _parse(cls, text):
        if not text.startswith("("):
            raise ValueError(f"expected '(' at {text!r}")
        text = text[1:]
        children = []
        while not text.startswith(")"):
            child, text = cls._parse(text)
            children.append(child)
        text = text[1:]
        favorite = None
        if children:
            if not text.startswith(":"):
                raise ValueError(f"expected ':favorite' at {text!r}")
            text = text[1:]
            digits = ""
            while text and text[0].isdigit():
                digits += text[0]
                text = text[1:]
            if not digits:
                raise ValueError("missing favorite index")
            favorite = int(digits)
        return cls(children, favorite), text

    def __eq__(self, other):
        if not isinstance(other, FCOrderedTree):
            return NotImplemented
        return self.children == other.children and self.favorite == other.favorite

    def __hash__(self):
        return hash(("F", self.children, self.favorite))

    def __repr__(self):
        return self.serialize()


def fc_trees(n):
    """All favorite-child trees with n edges."""
    out = []
    for shape in ordered_trees(n):
        out.extend(_decorate(shape))
    return tuple(out)


def _decorate(shape):
    if not shape.children:
        return (FCOrderedTree(),)
    decorated_children = [_decorate(c) for c in shape.children]
    out = []

    def build(i, acc):
        if i == len(decorated_children):
            for fav in range(1, len(acc) + 1):
                out.append(FCOrderedTree(tuple(acc), fav))
            return
        for option in decorated_children[i]:
            build(i + 1, acc + [option])

    build(0, [])
    return tuple(out)
