import cmath
import math

import pytest
from hypothesis import given, strategies as st

from race_density import CharacterTable, ConfigError, character_value, partition_characters


@pytest.fixture(scope="module")
def t11():
    return CharacterTable(11)


def test_least_primitive_root(t11):
    assert t11.primitive_root == 2
    assert t11.order == 10
    assert sorted(t11.dlog.values()) == list(range(10))


def test_value_at_8(t11):
    # chi_7(8) = e^{2 pi i / 10}
    assert character_value(t11, 7, 8) == pytest.approx(cmath.exp(2j * math.pi / 10), abs=1e-15)


def test_principal_and_quadratic(t11):
    for a in range(1, 11):
        assert character_value(t11, 0, a) == 1
    assert character_value(t11, 5, 2) == -1


def test_partition(t11):
    reals, half = partition_characters(t11)
    assert [l.index for l in reals] == [5]
    assert [l.index for l in half] == [1, 2, 3, 4]
    assert len(reals) + 2 * len(half) == 11 - 2


def test_partition_q3():
    t3 = CharacterTable(3)
    reals, half = partition_characters(t3)
    assert [l.index for l in reals] == [1]
    assert half == []


def test_conjugation(t11):
    for j in range(10):
        lab = t11.label(j)
        assert t11.label(lab.conjugate_index).conjugate_index == j
        for a in range(1, 11):
            assert character_value(t11, lab.conjugate_index, a) == pytest.approx(
                character_value(t11, j, a).conjugate(), abs=1e-15
            )


def test_orthogonality(t11):
    for a in range(1, 11):
        s = sum(character_value(t11, j, a) for j in range(10))
        expect = 10.0 if a == 1 else 0.0
        assert abs(s - expect) < 1e-12


def test_domain_errors(t11):
    with pytest.raises(ConfigError):
        character_value(t11, 3, 11)  # not reduced
    with pytest.raises(ConfigError):
        character_value(t11, 3, 22)
    with pytest.raises(ConfigError):
        character_value(t11, 10, 2)  # index out of range
    with pytest.raises(ConfigError):
        CharacterTable(12)  # composite modulus rejected


@given(
    j=st.integers(min_value=0, max_value=9),
    a=st.integers(min_value=1, max_value=10),
    b=st.integers(min_value=1, max_value=10),
)
def test_multiplicativity_exact_exponents(j, a, b):
    t = CharacterTable(11)
    ab = (a * b) % 11
    # exact at the exponent level, not merely to rounding
    assert t.exponent(j, ab) == (t.exponent(j, a) + t.exponent(j, b)) % 10


def test_parity(t11):
    assert [t11.parity(j) for j in range(1, 10)] == [-1, 1, -1, 1, -1, 1, -1, 1, -1]
