from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from monodromic.errors import AmbientMismatch
from monodromic.exactla import (
    Matrix,
    Subspace,
    image_basis,
    kernel_basis,
    rat,
    rat_str,
    row_reduce,
    solve_linear,
)

entries = st.integers(min_value=-6, max_value=6)


def matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(Matrix.from_rows)
        )
    )


def test_rat_parsing():
    assert rat("2/4") == Fraction(1, 2)
    assert rat_str(rat("-6/4")) == "-3/2"
    assert rat(3) == Fraction(3)


def test_row_reduce_identity():
    rref, rank, pivots = row_reduce(Matrix.identity(2))
    assert rank == 2 and pivots == [0, 1]
    assert rref == Matrix.identity(2)


def test_row_reduce_proportional_rows():
    _, rank, _ = row_reduce(Matrix.from_rows([[1, 2], [2, 4]]))
    assert rank == 1


def test_row_reduce_hand_example():
    rref, rank, pivots = row_reduce(Matrix.from_rows([[0, 1], [1, 0], [1, 1]]))
    assert rank == 2 and pivots == [0, 1]


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_row_reduce_idempotent(m):
    rref, rank, _ = row_reduce(m)
    again, rank2, _ = row_reduce(rref)
    assert again == rref and rank2 == rank


@given(matrices())
@settings(max_examples=60, deadline=None)
def test_rank_nullity(m):
    _, rank, _ = row_reduce(m)
    assert kernel_basis(m).dim + rank == m.cols


def test_kernel_examples():
    assert kernel_basis(Matrix.zero(3, 3)).dim == 3
    assert kernel_basis(Matrix.identity(3)).dim == 0
    k = kernel_basis(Matrix.from_rows([[1, 1]]))
    assert k.dim == 1 and k.contains([1, -1])


def test_subspace_canonical_equality():
    a = Subspace(3, [[1, 0, 1], [0, 1, 0]])
    b = Subspace(3, [[1, 1, 1], [2, 1, 2]])
    assert a == b
    assert a.basis == b.basis


def test_subspace_ops_examples():
    a = Subspace(2, [[1, 0]])
    b = Subspace(2, [[0, 1]])
    assert a.sum(b).dim == 2
    assert a.intersect(b).dim == 0
    line = Subspace(3, [[1, 1, 1]])
    plane = Subspace(3, [[1, 0, 1], [0, 1, 0]])
    assert plane.intersect(line) == line


def test_ambient_mismatch():
    with pytest.raises(AmbientMismatch):
        Subspace(2, [[1, 0]]).sum(Subspace(3, [[1, 0, 0]]))


@given(st.lists(st.lists(entries, min_size=3, max_size=3), min_size=0, max_size=3),
       st.lists(st.lists(entries, min_size=3, max_size=3), min_size=0, max_size=3))
@settings(max_examples=60, deadline=None)
def test_grassmann_identity(vs1, vs2):
    a = Subspace(3, vs1)
    b = Subspace(3, vs2)
    assert a.sum(b).dim + a.intersect(b).dim == a.dim + b.dim


def test_quotient_map_kernel():
    s = Subspace(3, [[1, 0, 1]])
    q = s.quotient_map()
    assert q.rows == 2
    assert all(x == 0 for x in q.apply([1, 0, 1]))
    assert kernel_basis(q) == s


def test_solve_linear():
    m = Matrix.from_rows([[1, 2], [0, 1]])
    x = solve_linear(m, [5, 2])
    assert m.apply(x) == [Fraction(5), Fraction(2)]
    assert solve_linear(Matrix.from_rows([[1, 1], [1, 1]]), [0, 1]) is None


def test_image_basis():
    m = Matrix.from_rows([[1, 2], [2, 4]])
    img = image_basis(m)
    assert img.dim == 1 and img.contains([1, 2])


def test_nilpotency():
    j = Matrix.from_rows([[0, 1], [0, 0]])
    assert j.is_nilpotent() and j.nilpotency_index() == 2
    assert not Matrix.identity(2).is_nilpotent()
