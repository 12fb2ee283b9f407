import pytest

from stirperm.bijections import (
    apairs,
    avoiding_permutations,
    composition_of,
    fc_involution,
    from_fc_tree,
    involution_pair,
    left_path_labeling,
    lr_minima,
    phi,
    phi_inverse,
    psi,
    psi_inverse_123,
    psi_inverse_132,
    rho,
    rho_inverse,
    to_fc_tree,
    verify_fc,
    verify_phi,
    verify_psi,
    verify_rho,
)
from stirperm.errors import InvalidPair, NotAvoider
from stirperm.formulas import count_avoid_123, count_avoid_213, plateau_poly_123
from stirperm.generation import generate_avoiders
from stirperm.polynomials import Polynomial
from stirperm.trees import TernaryTree, fc_trees, ordered_trees, ternary_trees
from stirperm.words import stats

P213, P123, P132 = (2, 1, 3), (1, 2, 3), (1, 3, 2)

EXAMPLE_PERM = (15, 16, 12, 9, 14, 13, 8, 7, 11, 4, 3, 1, 10, 6, 5, 2)


def test_phi_base_cases():
    assert phi((1, 1)) == TernaryTree()
    assert phi((1, 2, 2, 1)) == TernaryTree(None, TernaryTree(), None)
    assert phi((2, 2, 1, 1)) == TernaryTree(TernaryTree(), None, None)
    assert phi((1, 1, 2, 2)) == TernaryTree(None, None, TernaryTree())
    assert phi_inverse(TernaryTree()) == (1, 1)


def test_phi_rejects():
    with pytest.raises(NotAvoider):
        phi((1, 2, 2, 1, 3, 3))  # contains 213 via 2,1,3
    with pytest.raises(ValueError):
        phi((1, 2, 1, 2))
    with pytest.raises(ValueError):
        phi(())


def test_phi_round_trip_and_count():
    for n in range(1, 6):
        report = verify_phi(n)
        assert report["failures"] == 0
        assert report["statistic_transport"]["failures"] == 0
        assert report["checked"] == count_avoid_213(n)


def test_phi_bijective_onto_trees():
    for n in range(1, 5):
        images = {phi(w) for w in generate_avoiders(n, (P213,))}
        assert images == set(ternary_trees(n - 1))
        for tree in ternary_trees(n - 1):
            assert phi(phi_inverse(tree)) == tree


def test_phi_edge_statistic_transport():
    for n in range(1, 6):
        for word in generate_avoiders(n, (P213,)):
            s = stats(word)
            assert phi(word).edge_counts() == (n - s.aasc, n - s.plat, n - s.ades)


def test_phi_symmetry_pullback():
    # permuting edge-type axes leaves the joint statistic distribution fixed
    from itertools import permutations

    for n in range(1, 6):
        dist = {}
        for word in generate_avoiders(n, (P213,)):
            s = stats(word)
            key = (s.aasc, s.plat, s.ades)
            dist[key] = dist.get(key, 0) + 1
        tree_dist = {}
        for tree in ternary_trees(n - 1):
            key = tuple(n - c for c in tree.edge_counts())
            tree_dist[key] = tree_dist.get(key, 0) + 1
        assert dist == tree_dist
        for axes in permutations(range(3)):
            permuted = {}
            for key, v in dist.items():
                permuted[tuple(key[a] for a in axes)] = (
                    permuted.get(tuple(key[a] for a in axes), 0) + v
                )
            assert permuted == dist


def test_composition_examples():
    assert composition_of((4, 6, 5, 2, 1, 3)) == (3, 1, 2)
    assert lr_minima((4, 6, 5, 2, 1, 3)) == (4, 2, 1)
    assert composition_of((1, 2, 3, 4, 5)) == (5,)
    assert composition_of((5, 4, 3, 2, 1)) == (1, 1, 1, 1, 1)


def test_psi_examples():
    assert psi((1, 2, 2, 1)) == ((1, 2), (2,))
    assert psi((1, 1, 2, 2)) == ((1, 2), (1,))
    assert psi((2, 2, 1, 1)) == ((2, 1), (1, 1))
    # quoted segment fragments: an adjacent pair gives 1 distinct letter,
    # a pair bracketing one other value gives 2
    assert psi((7, 7)) == ((7,), (1,))
    assert psi((7, 10, 10, 7)) == ((7, 10), (2,))


def test_psi_inverse_base_case():
    assert psi_inverse_123(((1,), (1,))) == (1, 1)


def test_psi_round_trips():
    for n in range(1, 6):
        for family in ("123", "132"):
            report = verify_psi(n, family)
            assert report["failures"] == 0, (n, family)
            assert report["statistic_transport"]["failures"] == 0


def test_psi_inverse_132_order_two():
    built = {psi_inverse_132(pair) for pair in apairs(2, P132)}
    assert built == {(1, 1, 2, 2), (1, 2, 2, 1), (2, 2, 1, 1)}


def test_psi_inverse_errors():
    with pytest.raises(InvalidPair):
        psi_inverse_123(((1, 2, 3), (1, 1)))  # contains 123
    with pytest.raises(InvalidPair):
        psi_inverse_132(((1, 3, 2), (1, 1)))  # contains 132
    with pytest.raises(InvalidPair):
        psi_inverse_123(((2, 1), (1,)))  # wrong sequence length
    with pytest.raises(InvalidPair):
        psi_inverse_123(((2, 1), (2, 1)))  # entry above its bound


def test_apairs_cardinality():
    for n in range(1, 7):
        assert len(apairs(n, P123)) == count_avoid_123(n)
        assert len(apairs(n, P132)) == count_avoid_123(n)


def test_involution_examples():
    perm = (4, 6, 5, 2, 1, 3)
    assert involution_pair((perm, (3, 1, 1))) == (perm, (1, 1, 2))
    for pair in apairs(5, P123):
        assert involution_pair(involution_pair(pair)) == pair


def test_involution_statistic_swap():
    for n in range(1, 6):
        for word in generate_avoiders(n, (P123,)):
            swapped = psi_inverse_123(involution_pair(psi(word)))
            s, s2 = stats(word), stats(swapped)
            assert s2.plat == s.ades
            assert s2.ades == s.plat


def test_psi_statistic_formulas():
    for n in range(1, 6):
        for pattern in (P123, P132):
            for word in generate_avoiders(n, (pattern,)):
                perm, s = psi(word)
                comp = composition_of(perm)
                st = stats(word)
                assert st.plat == n - len(comp) + sum(1 for x in s if x == 1)
                if pattern == P123:
                    assert st.ades == n - len(comp) + sum(
                        1 for x, c in zip(s, comp) if x == c
                    )


def test_plateau_marginal_via_psi_132():
    # plateau counts of 132-avoiders recovered purely from the pair encoding
    n = 5
    terms = {}
    for perm in avoiding_permutations(n, P132):
        comp = composition_of(perm)
        from itertools import product

        for s in product(*[range(1, c + 1) for c in comp]):
            plat = n - len(comp) + sum(1 for x in s if x == 1)
            terms[(plat,)] = terms.get((plat,), 0) + 1
    assert Polynomial(("p",), terms) == plateau_poly_123(n)


def test_rho_single():
    assert rho((1,)).serialize() == "(())"
    assert rho_inverse(rho((1,))) == (1,)


def test_rho_worked_example():
    tree = rho(EXAMPLE_PERM)
    assert tree.edges() == 16
    assert rho_inverse(tree) == EXAMPLE_PERM
    labels = left_path_labeling(tree)
    assert sorted(labels.values()) == list(range(17))
    # family sizes by left-path label: parents 0,2,3,6,7,8,11,14
    family = {
        labels[path]: len(tree.node_at(path).children) for path in labels
    }
    parents = {lab: size for lab, size in family.items() if size}
    assert parents == {0: 5, 2: 1, 3: 1, 6: 2, 7: 1, 8: 3, 11: 1, 14: 2}
    # segment lengths right to left equal family sizes in label order
    assert [parents[k] for k in sorted(parents)] == [5, 1, 1, 2, 1, 3, 1, 2]


def test_left_path_labeling_simple_shapes():
    from stirperm.trees import OrderedTree

    chain = OrderedTree((OrderedTree((OrderedTree(),)),))
    labels = left_path_labeling(chain)
    assert labels == {(): 0, (0,): 1, (0, 0): 2}
    star = OrderedTree((OrderedTree(), OrderedTree(), OrderedTree()))
    labels = left_path_labeling(star)
    assert labels == {(): 0, (0,): 1, (1,): 2, (2,): 3}


def test_rho_round_trips():
    for n in range(1, 7):
        report = verify_rho(n)
        assert report["failures"] == 0
        assert report["statistic_transport"]["failures"] == 0
    assert len(avoiding_permutations(6, P123)) == len(ordered_trees(6))


def test_rho_rejects():
    with pytest.raises(NotAvoider):
        rho((1, 2, 3))


def test_fc_composite():
    for n in range(1, 6):
        report = verify_fc(n)
        assert report["failures"] == 0
        assert report["statistic_transport"]["failures"] == 0
        assert len(fc_trees(n)) == count_avoid_123(n)


def test_fc_round_trip_and_conjugacy():
    for pair in apairs(4, P123):
        tree = to_fc_tree(pair)
        assert from_fc_tree(tree) == pair
        assert fc_involution(fc_involution(tree)) == tree
        assert to_fc_tree(involution_pair(pair)) == fc_involution(tree)
