import pytest

from stirperm.generation import (
    distribution,
    double_factorial_odd,
    generate_all,
    generate_avoiders,
    joint_plat_122,
    second_order_eulerian,
)
from stirperm.polynomials import Polynomial
from stirperm.words import is_stirling

PQR = ("p", "q", "r")
PZ = ("p", "z")
P213, P123, P132 = (2, 1, 3), (1, 2, 3), (1, 3, 2)


def test_counts_match_double_factorial():
    for n in range(7):
        words = list(generate_all(n))
        assert len(words) == double_factorial_odd(n)
        assert len(set(words)) == len(words)


def test_generated_words_are_stirling():
    for n in range(6):
        assert all(is_stirling(w) for w in generate_all(n))


def test_canonical_order():
    assert list(generate_all(0)) == [()]
    assert list(generate_all(1)) == [(1, 1)]
    assert list(generate_all(2)) == [(1, 1, 2, 2), (1, 2, 2, 1), (2, 2, 1, 1)]
    first_three = []
    for w in generate_all(3):
        first_three.append(w)
        if len(first_three) == 3:
            break
    assert first_three == [(1, 1, 2, 2, 3, 3), (1, 1, 2, 3, 3, 2), (1, 1, 3, 3, 2, 2)]


def test_avoider_counts():
    assert len(list(generate_avoiders(3, (P213,)))) == 12
    assert len(list(generate_avoiders(3, (P123,)))) == 10
    assert set(generate_avoiders(2, (P213, (1, 1, 2, 2)))) == {
        (1, 2, 2, 1),
        (2, 2, 1, 1),
    }


def test_distribution_examples():
    p, q, r = Polynomial.gens(PQR)
    want = p * p * r + p * q * r + p * p * q
    assert distribution(2, (P213,)) == want
    assert distribution(2) == want
    assert distribution(1) == p
    assert distribution(0) == Polynomial.one(PQR)


def test_distribution_degree_and_mass():
    for n in range(1, 6):
        poly = distribution(n)
        assert poly.total_degrees() == {2 * n - 1}
        assert poly.evaluate({"p": 1, "q": 1, "r": 1}) == double_factorial_odd(n)


def test_second_order_eulerian():
    assert second_order_eulerian(1) == [1]
    assert second_order_eulerian(2) == [1, 2]
    assert second_order_eulerian(3) == [1, 8, 6]
    assert sum(second_order_eulerian(5)) == double_factorial_odd(5)
    with pytest.raises(ValueError):
        second_order_eulerian(0)


def test_joint_plat_122_small():
    p, z = Polynomial.gens(PZ)
    assert joint_plat_122(0) == Polynomial.one(PZ)
    assert joint_plat_122(1) == p
    assert joint_plat_122(2) == p * (p * z * z + z + p)


def test_joint_plat_122_order_three():
    p, z = Polynomial.gens(PZ)
    inner = (
        p * p * z**6
        + 2 * p * z**3
        + p * p * z**4
        + p * z**4
        + z * z
        + p * z * z
        + 2 * p * p * z * z
        + 2 * p * z
        + p * p
    )
    assert joint_plat_122(3) == p * inner


def test_negative_order_rejected():
    with pytest.raises(ValueError):
        list(generate_all(-1))
