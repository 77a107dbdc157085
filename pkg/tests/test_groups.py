import pytest
from hypothesis import given, settings, strategies as st

from pqcent.algebras import center, identity, is_commutative, multiply
from pqcent.groups import (
    cayley_table,
    class_sums,
    conjugacy_classes,
    cyclic_table,
    find_identity,
    group_algebra,
    group_tables,
    is_abelian,
    is_valid_group,
    quaternion_table,
    symmetric3_table,
    validate_group,
    verify_group_centralizer_structure,
)
from pqcent.centralizers import Weights
from pqcent.linalg import basis_vector, full_space, subspace_equal
from pqcent.reports import FAIL, PASS


def test_c2_is_valid_with_identity_zero():
    report = validate_group(cyclic_table(2))
    assert report.status == PASS
    assert "identity index 0" in report.note


def test_non_latin_column_rejected():
    t = cayley_table([[0, 1], [0, 1]])
    report = validate_group(t)
    assert report.status == FAIL
    failed = {a.name for a in report.failures()}
    assert "every column is a permutation" in failed


def test_shape_validation():
    with pytest.raises(ValueError):
        cayley_table([[0, 1]])
    with pytest.raises(ValueError):
        cayley_table([[0, 2], [2, 0]])


def test_associativity_witness():
    # subtraction mod 3 is a Latin square but not associative
    t = cayley_table([[0, 2, 1], [1, 0, 2], [2, 1, 0]])
    report = validate_group(t)
    names = {a.name: a.passed for a in report.assertions}
    assert names["every row is a permutation"]
    assert names["every column is a permutation"]
    assert not names["multiplication is associative"]
    assert report.status == FAIL


def test_s3_and_q8_are_valid():
    assert is_valid_group(symmetric3_table())
    assert is_valid_group(quaternion_table())


def test_find_identity():
    assert find_identity(cyclic_table(5)) == 0
    # [[1,0],[0,1]] is c2 with the identity relabeled to index 1
    assert find_identity(cayley_table([[1, 0], [0, 1]])) == 1
    assert find_identity(cayley_table([[1, 1], [0, 0]])) is None


def test_conjugacy_classes_abelian_are_singletons():
    for n in (1, 2, 3, 4):
        classes = conjugacy_classes(cyclic_table(n))
        assert len(classes) == n
        assert all(len(c) == 1 for c in classes)


def test_conjugacy_classes_s3():
    classes = conjugacy_classes(symmetric3_table())
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 2, 3]


def test_conjugacy_classes_q8():
    classes = conjugacy_classes(quaternion_table())
    sizes = sorted(len(c) for c in classes)
    assert sizes == [1, 1, 2, 2, 2]


def test_class_sums_span_center():
    for name, t in group_tables().items():
        a = group_algebra(t)
        assert subspace_equal(class_sums(t), center(a)), name


def test_group_algebra_c2():
    a = group_algebra(cyclic_table(2))
    assert is_commutative(a)
    b1 = basis_vector(2, 1)
    assert multiply(a, b1, b1) == basis_vector(2, 0)
    assert identity(a) == basis_vector(2, 0)


def test_group_algebra_s3_noncommutative_unital():
    a = group_algebra(symmetric3_table())
    assert not is_commutative(a)
    assert identity(a) == basis_vector(6, 0)


def test_group_algebra_rejects_invalid_table():
    with pytest.raises(ValueError):
        group_algebra(cayley_table([[0, 1], [0, 1]]))


def test_abelian_detection():
    assert is_abelian(cyclic_table(6))
    assert not is_abelian(symmetric3_table())
    assert not is_abelian(quaternion_table())


def test_verify_group_centralizer_structure():
    w = Weights(1, 2)
    for name, t in group_tables().items():
        report = verify_group_centralizer_structure(t, w)
        assert report.status == PASS, (name, report.lines(True))


def test_verify_group_centralizer_dimensions():
    expected = {"c2": 2, "c3": 3, "s3": 3, "q8": 5}
    for name, t in group_tables().items():
        assert len(conjugacy_classes(t)) == expected[name]


def test_verify_rejects_invalid_group():
    report = verify_group_centralizer_structure(
        cayley_table([[0, 1], [0, 1]]), Weights(1, 2)
    )
    assert report.status == FAIL


@settings(max_examples=20, deadline=None)
@given(st.integers(1, 10))
def test_cyclic_groups_valid_with_n_classes(n):
    t = cyclic_table(n)
    assert is_valid_group(t)
    assert len(conjugacy_classes(t)) == n
    assert class_sums(t) == full_space(n)
