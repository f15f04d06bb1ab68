from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from monodromic.errors import NotCompatible, NotNilpotent, NotSl2
from monodromic.exactla import Matrix, Subspace
from monodromic.filtration import (
    DeligneSystem,
    Flag,
    NONEXISTENT,
    bigrading_dims,
    bistrictness_check,
    deligne_splitting,
    integer_eigenspaces,
    monodromy_filtration,
    relative_monodromy_filtration,
    sl2_primitive_decomposition,
    solve_raising_operator,
    spectral_sequence_page,
    strictness_check,
    weight_conditions_hold,
)
from monodromic.complexes import FilteredComplex


def J(n):
    return Matrix(n, n, [[1 if j == i + 1 else 0 for j in range(n)] for i in range(n)])


def test_flag_canonical():
    a = Flag(2, "inc", [(0, Subspace(2, [[1, 0]])), (3, Subspace.full(2))])
    b = Flag(2, "inc", [(-1, Subspace.zero(2)), (0, Subspace(2, [[1, 0]])),
                        (1, Subspace(2, [[1, 0]])), (3, Subspace.full(2))])
    assert a == b
    assert a.value_at(-1).dim == 0
    assert a.value_at(2).dim == 1
    assert a.value_at(10).dim == 2


def test_flag_shift():
    f = Flag.single_jump(2, "inc", 0)
    assert f.shift(3).jumps() == [3]
    assert f.shift(3).shift(-3) == f


# -- monodromy filtration ---------------------------------------------------


def test_monodromy_zero_operator():
    w = monodromy_filtration(Matrix.zero(3, 3), 0)
    assert w.value_at(-1).dim == 0 and w.value_at(0).dim == 3


def test_monodromy_j2():
    w = monodromy_filtration(J(2), 0)
    assert [w.value_at(k).dim for k in (-2, -1, 0, 1)] == [0, 1, 1, 2]
    assert weight_conditions_hold(J(2), w, 0)


def test_monodromy_j3_plus_j1():
    # Jordan type (3,1) centered at zero: graded dimensions 1,0,2,0,1 at
    # k = -2..2, so the cumulative dims are (1,1,3,3,4).
    n = Matrix.from_rows([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    w = monodromy_filtration(n, 0)
    assert [w.value_at(k).dim for k in (-2, -1, 0, 1, 2)] == [1, 1, 3, 3, 4]
    assert weight_conditions_hold(n, w, 0)


def test_monodromy_rejects_non_nilpotent():
    with pytest.raises(NotNilpotent):
        monodromy_filtration(Matrix.identity(2), 0)


@given(st.integers(1, 5), st.integers(-2, 2), st.randoms(use_true_random=False))
@settings(max_examples=30, deadline=None)
def test_monodromy_conditions_random(dim, center, rng):
    upper = [[rng.choice([-1, 0, 0, 1, 2]) if j > i else 0 for j in range(dim)]
             for i in range(dim)]
    n = Matrix(dim, dim, upper)
    w = monodromy_filtration(n, center)
    assert weight_conditions_hold(n, w, center)


# -- relative monodromy filtration -------------------------------------------


def test_relative_zero_returns_input():
    l = Flag(3, "inc", [(0, Subspace(3, [[1, 0, 0]])), (2, Subspace.full(3))])
    assert relative_monodromy_filtration(Matrix.zero(3, 3), l) == l


def test_relative_single_jump_is_absolute():
    l = Flag(2, "inc", [(5, Subspace.full(2))])
    w = relative_monodromy_filtration(J(2), l)
    assert w == monodromy_filtration(J(2), 5)


def _brute_force_relative(n, lflag, lines, index_range):
    """All flags on Q^2 with steps among the given lines, checked against
    both defining conditions directly."""
    full = Subspace.full(2)
    zero = Subspace.zero(2)
    survivors = []
    spans = [zero] + lines + [full]
    indices = list(index_range)
    for jumps in product(indices, repeat=2):
        a, b = jumps
        if a > b:
            continue
        for line in lines:
            steps = [(a, line), (b, full)]
            try:
                w = Flag(2, "inc", steps)
            except ValueError:
                continue
            if _conditions_hold(n, lflag, w):
                survivors.append(w)
    # flags jumping straight to the full space
    for a in indices:
        w = Flag(2, "inc", [(a, full)])
        if _conditions_hold(n, lflag, w):
            survivors.append(w)
    unique = []
    for w in survivors:
        if w not in unique:
            unique.append(w)
    return unique


def _conditions_hold(n, lflag, wflag):
    from monodromic.filtration import relative_conditions_hold

    return relative_conditions_hold(n, lflag, wflag)


def test_relative_two_dim_example_matches_brute_force():
    # L jumps at 0 (a line) and 2 (everything); the operator kills the
    # line and sends the complement into it.
    n = Matrix.from_rows([[0, 1], [0, 0]])
    l = Flag(2, "inc", [(0, Subspace(2, [[1, 0]])), (2, Subspace.full(2))])
    w = relative_monodromy_filtration(n, l)
    assert w is not NONEXISTENT
    assert [w.value_at(k).dim for k in (-1, 0, 1, 2)] == [0, 1, 1, 2]
    survivors = _brute_force_relative(n, l, [Subspace(2, [[1, 0]])], range(-3, 4))
    assert survivors == [w]


def test_relative_nonexistent():
    n = Matrix.from_rows([[0, 1, 0], [0, 0, 1], [0, 0, 0]])
    l = Flag(3, "inc", [(0, Subspace(3, [[1, 0, 0], [0, 1, 0]])), (2, Subspace.full(3))])
    assert relative_monodromy_filtration(n, l) is NONEXISTENT


def test_relative_incompatible_raises():
    n = Matrix.from_rows([[0, 0], [1, 0]])
    l = Flag(2, "inc", [(0, Subspace(2, [[1, 0]])), (2, Subspace.full(2))])
    with pytest.raises(NotCompatible):
        relative_monodromy_filtration(n, l)


def test_relative_restricts_to_graded_monodromy():
    # on each graded piece of L the induced filtration is the centered
    # monodromy filtration of the induced operator
    n = Matrix.from_rows([[0, 1], [0, 0]])
    l = Flag(2, "inc", [(-1, Subspace(2, [[1, 0]])), (1, Subspace.full(2))])
    w = relative_monodromy_filtration(n, l)
    assert w is not NONEXISTENT
    assert [w.value_at(k).dim for k in (-2, -1, 0, 1)] == [0, 1, 1, 2]


# -- splitting operators ------------------------------------------------------


def _example_system():
    n = Matrix.from_rows([
        [0, 0, 1, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 0],
        [0, 0, 1, 0],
    ])
    y = Matrix.from_rows([[1, 0, 0, 0], [0, -1, 0, 0], [0, 0, 3, 0], [0, 0, 0, 1]])
    seed = Matrix.from_rows([[0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 2, 0], [0, 0, 0, 2]])
    l = Flag(4, "inc", [(0, Subspace(4, [[1, 0, 0, 0], [0, 1, 0, 0]])),
                        (2, Subspace.full(4))])
    return DeligneSystem(l, n, y), seed


def test_deligne_splitting_hand_example():
    system, seed = _example_system()
    yprime = deligne_splitting(system, seed)
    eig = integer_eigenspaces(yprime)
    assert eig[2] == Subspace(4, [[0, 0, 1, 0], [Fraction(1, 2), 0, 0, 1]])
    assert DeligneSystem(system.lflag, system.n, system.y, yprime).violations() == []
    assert bigrading_dims(system.y, yprime) == {(3, 2): 1, (1, 2): 1, (1, 0): 1, (-1, 0): 1}


def test_deligne_splitting_trivial_cases():
    system, seed = _example_system()
    # with the non-primitive part removed the seed is already the answer
    n0 = Matrix.from_rows([[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]])
    assert deligne_splitting(DeligneSystem(system.lflag, n0, system.y), seed) == seed
    zero = Matrix.zero(4, 4)
    assert deligne_splitting(DeligneSystem(system.lflag, zero, seed), seed) == seed


def test_sl2_primitive_decomposition_roundtrip():
    system, seed = _example_system()
    h = system.y - seed
    eminus = Matrix.from_rows([[0, 0, 0, 0], [1, 0, 0, 0], [0, 0, 0, 0], [0, 0, 1, 0]])
    x = Matrix.from_rows([[0, 0, 1, 0], [0, 0, 0, 0], [0, 0, 0, 0], [0, 0, 0, 0]])
    xp, xs = sl2_primitive_decomposition(eminus, h, x)
    assert xp + (eminus @ xs - xs @ eminus) == x
    eplus = solve_raising_operator(eminus, h)
    assert (eplus @ xp - xp @ eplus).is_zero()
    # primitive input comes back unchanged
    yp, ys = sl2_primitive_decomposition(eminus, h, xp)
    assert yp == xp and (eminus @ ys - ys @ eminus).is_zero()


def test_sl2_rejects_bad_pair():
    with pytest.raises(NotSl2):
        solve_raising_operator(Matrix.zero(2, 2), Matrix.identity(2))


# -- strictness and pages -----------------------------------------------------


def _two_term(dim0, dim1, d, f0, f1):
    return FilteredComplex({0: dim0, 1: dim1}, {0: d}, {"F": {0: f0, 1: f1}})


def test_strictness_zero_differential():
    c = _two_term(1, 1, Matrix.zero(1, 1),
                  Flag.single_jump(1, "inc", 0), Flag.single_jump(1, "inc", 2))
    assert strictness_check(c, "F")


def test_strictness_late_source_flag():
    # identity differential, the source flag jumps later than the target:
    # the image meets the flag early, so strictness fails
    c = _two_term(1, 1, Matrix.identity(1),
                  Flag.single_jump(1, "inc", 1), Flag.single_jump(1, "inc", 0))
    assert not strictness_check(c, "F")


def test_bistrictness_identity_and_zero():
    f = Flag.single_jump(2, "inc", 0)
    g = Flag(2, "inc", [(0, Subspace(2, [[1, 0]])), (1, Subspace.full(2))])
    assert bistrictness_check(Matrix.identity(2), f, g, f, g)
    assert bistrictness_check(Matrix.zero(2, 2), f, g, f, g)


def test_bistrictness_crossed_flags_fail():
    # a rank-one map into the plane, individually strict for both flags,
    # but the two flags cross along the image: the sum identity fails at
    # the mixed level (0, 0)
    phi = Matrix.from_rows([[1], [1]])
    src_f = Flag.single_jump(1, "inc", 1)
    src_g = Flag.single_jump(1, "inc", 1)
    tgt_f = Flag(2, "inc", [(0, Subspace(2, [[1, 0]])), (1, Subspace.full(2))])
    tgt_g = Flag(2, "inc", [(0, Subspace(2, [[0, 1]])), (1, Subspace.full(2))])
    assert not bistrictness_check(phi, src_f, src_g, tgt_f, tgt_g)


def test_spectral_sequence_trivial_filtration():
    d = Matrix.from_rows([[0, 1], [0, 0]])
    flag = Flag.single_jump(2, "inc", 0)
    c = FilteredComplex({0: 2, 1: 2}, {0: d}, {"F": {0: flag, 1: flag}})
    e1 = spectral_sequence_page(c, 1, "F")
    homology = c.homology_dims()
    totals = {}
    for (p, q), dim in e1.items():
        totals[p + q] = totals.get(p + q, 0) + dim
    assert totals == {k: v for k, v in homology.items() if v}


def test_spectral_sequence_strict_two_step():
    # identity differential with both terms jumping together: everything
    # cancels already on the first page
    flag = Flag(1, "inc", [(0, Subspace.full(1))])
    c = FilteredComplex({0: 1, 1: 1}, {0: Matrix.identity(1)},
                        {"F": {0: flag, 1: flag}})
    assert spectral_sequence_page(c, 1, "F") == {}
