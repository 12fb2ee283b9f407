"""Executable bijections between avoider classes, trees and labeled pairs.

Maps implemented here, each with its inverse:

* phi: 213-avoiding Stirling permutations of order n  <->  ternary trees
  with n-1 edges, transporting the augmented statistics onto edge types.
* psi: a Stirling permutation maps to (p, s) where p is its permutation of
  first occurrences and s records, for each left-to-right minimum of p, how
  many distinct letters sit between (and including) its two copies.
  Restricted to 123-avoiders or to 132-avoiders, psi is a bijection onto
  the pairs whose sequence s is bounded by the segment composition of p.
* rho: 123-avoiding permutations of [n]  <->  n-edge ordered trees, via
  segments attaching to the vertex one below their leading minimum.
* The favorite-child composite: pairs (p, s) map onto ordered trees whose
  parents each mark a favorite child.
"""

from __future__ import annotations

from itertools import permutations, product

from .errors import InvalidPair, NotAvoider
from .trees import FCOrderedTree, OrderedTree, TernaryTree
from .words import contains, first_occurrences, format_word, is_stirling, stats

PATTERN_213 = (2, 1, 3)
PATTERN_123 = (1, 2, 3)
PATTERN_132 = (1, 3, 2)


# -- phi: 213-avoiders and ternary trees ------------------------------------


def phi(word):
    """Ternary tree of a 213-avoiding Stirling permutation of order n >= 1.

    The word splits uniquely as A 1 B 1 C around the two copies of its
    smallest letter, with every letter of A above every letter of B above
    every letter of C; the three blocks hang as the left, vertical and
    right subtrees.
    """
    if not word:
        raise ValueError("phi is defined for order >= 1")
    if not is_stirling(word):
        raise ValueError(f"not a Stirling permutation: {format_word(word)}")
    if contains(word, PATTERN_213):
        raise NotAvoider(f"{format_word(word)} contains 213")
    return _phi(word)


def _phi(word):
    if len(word) == 2:
        return TernaryTree()
    low = min(word)
    i = word.index(low)
    j = word.index(low, i + 1)
    blocks = (word[:i], word[i + 1 : j], word[j + 1 :])
    left, vertical, right = (_phi(b) if b else None for b in blocks)
    return TernaryTree(left, vertical, right)


def phi_inverse(tree, order=None):
    """Inverse of phi; a tree with m edges yields a word of order m + 1."""
    n = tree.edges() + 1
    if order is not None and order != n:
        raise ValueError(f"tree has {n - 1} edges, expected order {order}")
    return _phi_inverse(tree)


def _phi_inverse(tree):
    blocks = [(_phi_inverse(c) if c is not None else ()) for c in tree.slots()]
    sizes = [len(b) // 2 for b in blocks]
    offsets = (1 + sizes[1] + sizes[2], 1 + sizes[2], 1)
    shifted = [
        tuple(x + off for x in block) for block, off in zip(blocks, offsets)
    ]
    return shifted[0] + (1,) + shifted[1] + (1,) + shifted[2]


# -- compositions and the psi pairing ---------------------------------------


def lr_minima(perm):
    """Values of the left-to-right minima, in order of appearance."""
    out = []
    for x in perm:
        if not out or x < out[-1]:
            out.append(x)
    return tuple(out)


def composition_of(perm):
    """Gaps between successive left-to-right minimum positions.

    A sentinel below everything is appended, so the parts sum to len(perm)
    and are exactly the segment lengths (a segment starts at each minimum).
    """
    positions = []
    best = None
    for i, x in enumerate(perm):
        if best is None or x < best:
            best = x
            positions.append(i)
    positions.append(len(perm))
    return tuple(b - a for a, b in zip(positions, positions[1:]))


def _segments(perm):
    sizes = composition_of(perm)
    out = []
    start = 0
    for size in sizes:
        out.append(perm[start : start + size])
        start += size
    return out


def psi(word):
    """Pair (p, s): first-occurrence permutation plus minimum-span counts.

    s_i counts the distinct letters in the subword bounded by, and
    including, the two copies of the i-th left-to-right minimum of p, so an
    immediate plateau "mm" gives s_i = 1.
    """
    perm = first_occurrences(word)
    s = []
    for m in lr_minima(perm):
        i = word.index(m)
        j = word.index(m, i + 1)
        s.append(len(set(word[i : j + 1])))
    return perm, tuple(s)


def _check_pair(perm, s):
    comp = composition_of(perm)
    if len(s) != len(comp):
        raise InvalidPair(f"sequence length {len(s)} != {len(comp)} segments")
    for si, ci in zip(s, comp):
        if not 1 <= si <= ci:
            raise InvalidPair(f"entry {si} outside 1..{ci}")
    return comp


def _rebuild_word(perm, s):
    """Reassemble the Stirling permutation encoded by (perm, s).

    Every non-minimum letter is doubled in place; the second copy of the
    i-th minimum is inserted after s_i - 1 of the doubled letters in its
    own segment.
    """
    out = []
    for segment, si in zip(_segments(perm), s):
        m, rest = segment[0], segment[1:]
        out.append(m)
        for a in rest[: si - 1]:
            out += [a, a]
        out.append(m)
        for a in rest[si - 1 :]:
            out += [a, a]
    return tuple(out)


def psi_inverse_123(pair):
    """Inverse of psi on the 123-avoiding class."""
    perm, s = pair
    if contains(perm, PATTERN_123):
        raise InvalidPair(f"base permutation {format_word(perm)} contains 123")
    _check_pair(perm, s)
    return _rebuild_word(perm, s)


def psi_inverse_132(pair):
    """Inverse of psi on the 132-avoiding class.

    The reconstruction is the same in-segment insertion as for 123; only
    the avoidance class of the base permutation changes.
    """
    perm, s = pair
    if contains(perm, PATTERN_132):
        raise InvalidPair(f"base permutation {format_word(perm)} contains 132")
    _check_pair(perm, s)
    return _rebuild_word(perm, s)


def involution_pair(pair):
    """The sign flip (p, s) -> (p, c + 1 - s); an involution fixing p."""
    perm, s = pair
    comp = _check_pair(perm, s)
    return perm, tuple(c + 1 - x for c, x in zip(comp, s))


def avoiding_permutations(n, pattern):
    """All permutations of [n] avoiding the pattern (plain brute force)."""
    return [
        perm for perm in permutations(range(1, n + 1)) if not contains(perm, pattern)
    ]


def apairs(n, pattern=PATTERN_123):
    """All pairs (p, s) with p avoiding the pattern and s bounded by c(p)."""
    out = []
    for perm in avoiding_permutations(n, pattern):
        ranges = [range(1, c + 1) for c in composition_of(perm)]
        for s in product(*ranges):
            out.append((perm, s))
    return out


# -- rho: 123-avoiding permutations and ordered trees ------------------------


def _children_by_vertex(perm):
    """Vertex -> sorted children, one segment hanging below m - 1 each."""
    children = {}
    for segment in _segments(perm):
        target = segment[0] - 1
        children[target] = sorted(segment)
    return children


def rho(perm):
    """Ordered tree of a 123-avoiding permutation of [n] (n edges).

    Each segment's entries are joined to the vertex one below the segment's
    leading minimum; the root is 0 and children are ordered increasingly,
    then labels are erased.
    """
    if contains(perm, PATTERN_123):
        raise NotAvoider(f"{format_word(perm)} contains 123")
    children = _children_by_vertex(perm)

    def build(v):
        return OrderedTree(tuple(build(c) for c in children.get(v, ())))

    tree = build(0)
    if tree.edges() != len(perm):
        raise ValueError("segment edges did not form a tree on 0..n")
    return tree


def left_path_labeling(tree):
    """Vertex labels (by child-index path) in leftmost-path order.

    The root gets 0.  Repeatedly take the labeled vertex with the smallest
    label that still has an unlabeled child, and label the leftmost path
    descending from each of its unlabeled children, left to right, with the
    smallest unused labels.
    """
    labels = {(): 0}
    nxt = 1
    while True:
        best = None
        for path, lab in labels.items():
            node = tree.node_at(path)
            if any(path + (i,) not in labels for i in range(len(node.children))):
                if best is None or lab < labels[best]:
                    best = path
        if best is None:
            return labels
        node = tree.node_at(best)
        for i in range(len(node.children)):
            cpath = best + (i,)
            if cpath in labels:
                continue
            walk, nd = cpath, node.children[i]
            while True:
                labels[walk] = nxt
                nxt += 1
                if not nd.children:
                    break
                walk, nd = walk + (0,), nd.children[0]


def rho_inverse(tree):
    """Recover the 123-avoiding permutation from an ordered tree.

    Under the leftmost-path labels, the leftmost child of every parent is a
    left-to-right minimum and the parent's family size is the length of
    that minimum's segment; all remaining entries decrease left to right.
    """
    n = tree.edges()
    labels = left_path_labeling(tree)
    minima = []
    family = {}
    for path, lab in labels.items():
        node = tree.node_at(path)
        if node.children:
            leftmost = labels[path + (0,)]
            minima.append(leftmost)
            family[leftmost] = len(node.children)
    minima.sort(reverse=True)
    fillers = sorted(set(range(1, n + 1)) - set(minima), reverse=True)
    out = []
    at = 0
    for m in minima:
        take = family[m] - 1
        out.append(m)
        out.extend(fillers[at : at + take])
        at += take
    return tuple(out)


# -- favorite-child composite -------------------------------------------------


def to_fc_tree(pair):
    """Map (p, s) onto the ordered tree rho(p) with favorites read off s.

    The parent of the i-th minimum m_i is the vertex m_i - 1; its family is
    the i-th segment, and s_i becomes the favorite index there.
    """
    perm, s = pair
    if contains(perm, PATTERN_123):
        raise InvalidPair(f"base permutation {format_word(perm)} contains 123")
    _check_pair(perm, s)
    children = _children_by_vertex(perm)
    favorite = {m - 1: si for m, si in zip(lr_minima(perm), s)}

    def build(v):
        kids = children.get(v, ())
        return FCOrderedTree(
            tuple(build(c) for c in kids), favorite[v] if kids else None
        )

    return build(0)


def from_fc_tree(tree):
    """Inverse of to_fc_tree."""
    perm = rho_inverse(tree.underlying())
    labels = left_path_labeling(tree.underlying())
    path_of = {lab: path for path, lab in labels.items()}
    s = []
    for m in lr_minima(perm):
        parent = tree.node_at(path_of[m - 1])
        s.append(parent.favorite)
    return perm, tuple(s)


def fc_involution(tree):
    """Reverse the age ranking of every favorite child (an involution)."""
    kids = tuple(fc_involution(c) for c in tree.children)
    fav = len(kids) + 1 - tree.favorite if kids else None
    return FCOrderedTree(kids, fav)


# -- exhaustive verification helpers -----------------------------------------


def verify_phi(n):
    """Round-trip and statistic transport of phi over all order-n avoiders."""
    from .generation import generate_avoiders

    checked = failures = transport_failures = 0
    seen = set()
    for word in generate_avoiders(n, (PATTERN_213,)):
        checked += 1
        tree = phi(word)
        seen.add(tree)
        if phi_inverse(tree) != word:
            failures += 1
            continue
        s = stats(word)
        if tree.edge_counts() != (n - s.aasc, n - s.plat, n - s.ades):
            transport_failures += 1
    if len(seen) != checked:
        failures += checked - len(seen)
    return {
        "checked": checked,
        "failures": failures,
        "statistic_transport": {"checked": checked, "failures": transport_failures},
    }


def verify_psi(n, family="123"):
    """Round-trip of psi and its plateau/descent bookkeeping on one class."""
    from .generation import generate_avoiders

    if family == "123":
        pattern, inverse = PATTERN_123, psi_inverse_123
    elif family == "132":
        pattern, inverse = PATTERN_132, psi_inverse_132
    else:
        raise ValueError(f"unknown family {family!r}")
    checked = failures = transport_failures = 0
    images = set()
    for word in generate_avoiders(n, (pattern,)):
        checked += 1
        pair = psi(word)
        images.add(pair)
        if inverse(pair) != word:
            failures += 1
            continue
        perm, s = pair
        comp = composition_of(perm)
        st = stats(word)
        plat_ok = st.plat == n - len(comp) + sum(1 for x in s if x == 1)
        des_ok = family == "132" or st.ades == n - len(comp) + sum(
            1 for x, c in zip(s, comp) if x == c
        )
        if not (plat_ok and des_ok):
            transport_failures += 1
    expected_pairs = set(apairs(n, pattern))
    if images != expected_pairs:
        failures += len(expected_pairs.symmetric_difference(images))
    return {
        "checked": checked,
        "failures": failures,
        "statistic_transport": {"checked": checked, "failures": transport_failures},
    }


def verify_rho(n):
    """Round-trip of rho in both directions plus segment-length transport."""
    from .trees import ordered_trees

    checked = failures = transport_failures = 0
    for perm in avoiding_permutations(n, PATTERN_123):
        checked += 1
        tree = rho(perm)
        if rho_inverse(tree) != perm:
            failures += 1
            continue
        # segment lengths right to left == family sizes in label order
        seg_back = [len(seg) for seg in reversed(_segments(perm))]
        labels = left_path_labeling(tree)
        parents = sorted(
            (lab, len(tree.node_at(path).children))
            for path, lab in labels.items()
            if tree.node_at(path).children
        )
        if seg_back != [size for _, size in parents]:
            transport_failures += 1
    for tree in ordered_trees(n):
        checked += 1
        if rho(rho_inverse(tree)) != tree:
            failures += 1
    return {
        "checked": checked,
        "failures": failures,
        "statistic_transport": {"checked": checked, "failures": transport_failures},
    }


def verify_fc(n):
    """Round-trip of the favorite-child composite and involution conjugacy."""
    checked = failures = transport_failures = 0
    images = set()
    for pair in apairs(n, PATTERN_123):
        checked += 1
        tree = to_fc_tree(pair)
        images.add(tree)
        if from_fc_tree(tree) != pair:
            failures += 1
            continue
        if fc_involution(fc_involution(tree)) != tree:
            failures += 1
            continue
        if to_fc_tree(involution_pair(pair)) != fc_involution(tree):
            transport_failures += 1
    from .trees import fc_trees

    if images != set(fc_trees(n)):
        failures += 1
    return {
        "checked": checked,
        "failures": failures,
        "statistic_transport": {"checked": checked, "failures": transport_failures},
    }
