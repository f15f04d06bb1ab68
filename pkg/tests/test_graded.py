from fractions import Fraction

import pytest

from monodromic.errors import BadParams, WindowTooSmall
from monodromic.exactla import Matrix, Subspace
from monodromic.filtration import Flag
from monodromic.graded import (
    ModuleMorphism,
    MonodromicModule,
    build_example,
    direct_sum,
    external_tensor,
    apply_antipodal,
    hodge_decomposition_check,
    is_pure_eigen,
    morphism_kernel_cokernel,
    tate_twist,
    validate_module,
    weight_lowering_property,
    zero_module,
    zero_section_vfiltration,
)

F = Fraction


@pytest.fixture(scope="module")
def s1():
    return build_example("STRUCTURE", (-4, 7))


@pytest.fixture(scope="module")
def d1():
    return build_example("DELTA", (-7, 4))


@pytest.fixture(scope="module")
def kummer():
    return build_example("KUMMER", (F(-9, 2), F(11, 2)), lam=F(1, 2))


def test_structure_shape(s1):
    assert validate_module(s1) == []
    assert s1.dims[F(0)] == 0 and s1.dims[F(1)] == 1
    assert s1.zmap(1, F(1)) == Matrix(1, 1, [[1]])
    assert s1.dmap(1, F(3)) == Matrix(1, 1, [[2]])
    assert is_pure_eigen(s1)


def test_delta_shape(d1):
    assert validate_module(d1) == []
    assert d1.dims[F(0)] == 1 and d1.dims[F(1)] == 0
    assert d1.dmap(1, F(0)) == Matrix(1, 1, [[1]])
    assert d1.zmap(1, F(-2)) == Matrix(1, 1, [[-2]])
    # flags follow the closed-embedding push-forward pattern
    assert d1.hodge_flag(F(-2)).jumps() == [3]


def test_kummer_shape(kummer):
    assert validate_module(kummer) == []
    assert kummer.dims[F(1, 2)] == 1 and kummer.dims[F(1)] == 0
    for chi in kummer.grid:
        if kummer.dims[chi] and kummer.in_window(chi - 1) and kummer.dims[chi - 1]:
            assert kummer.dmap(1, chi).entries[0][0] != 0
    with pytest.raises(BadParams):
        build_example("KUMMER", (-2, 2), lam=2)


def test_jordan_shape():
    j = build_example("JORDAN", (-4, 5), size=2)
    assert validate_module(j) == []
    theta = j.euler_zd(F(0))
    assert theta == Matrix.from_rows([[-1, 1], [0, -1]])
    nil = theta - Matrix.scalar(2, -1)
    assert nil.nilpotency_index() == 2
    assert not is_pure_eigen(j)
    assert weight_lowering_property(j)


def test_validation_fault_is_located(d1):
    bad = dict(d1.dmaps)
    bad[(1, F(-2))] = Matrix(1, 1, [[7]])
    broken = MonodromicModule(1, 1, d1.window, d1.dims, d1.zmaps, bad)
    issues = validate_module(broken)
    kinds = {(e.kind, e.chi) for e in issues}
    assert any(k == "canonical-relation" for k, _ in kinds)
    assert any(chi in (F(-2), F(-3), F(-1)) for _, chi in kinds)


def test_zero_module_valid():
    assert validate_module(zero_module()) == []


def test_zero_section_vfiltration(s1, d1, kummer):
    v = zero_section_vfiltration(s1, 0)
    assert all(v[chi].dim == s1.dims[chi] for chi in s1.grid)
    v = zero_section_vfiltration(d1, F(1, 2))
    assert all(v[chi].dim == 0 for chi in d1.grid if chi < F(1, 2))
    v = zero_section_vfiltration(kummer, F(1, 2))
    assert v[F(1, 2)].dim == 1 and v[F(-1, 2)].dim == 0


def test_antipodal_involution(s1, d1):
    assert apply_antipodal(apply_antipodal(s1)).equals(s1)
    negated = apply_antipodal(d1)
    assert validate_module(negated) == []
    j = build_example("JORDAN", (-4, 5), size=2)
    assert apply_antipodal(j).euler_zd(F(1)) == j.euler_zd(F(1))


def test_tate_twist_group_action(s1):
    assert tate_twist(s1, 0).equals(s1)
    assert tate_twist(tate_twist(s1, 2), -2).equals(s1)
    twisted = tate_twist(s1, 1)
    assert twisted.hodge_flag(F(1)).jumps() == [1]
    # twisting by one lowers the weight jump by two
    assert twisted.weight_flag(F(1)).jumps() == [-1]


def test_direct_sum(s1, d1):
    both = direct_sum(s1, d1)
    assert validate_module(both) == []
    assert both.dims[F(1)] == s1.dims[F(1)] + d1.dims[F(1)]


def test_tensor_structure_squares(s1):
    product = external_tensor(s1, s1)
    module = product.to_module((2, 6))
    assert validate_module(module) == []
    reference = build_example("STRUCTURE", (2, 6), rank=2)
    assert module.dims == reference.dims
    # hodge flags agree up to the pairing of monomial bases: both are
    # single jumps at zero of the same dimension
    for chi in module.grid:
        if module.dims[chi]:
            assert module.hodge_flag(chi).jumps() == reference.hodge_flag(chi).jumps()


def test_tensor_kummer_counts(kummer):
    product = external_tensor(kummer, kummer)
    assert product.piece_dim(F(1)) == len(product.pairs_for(F(1))) > 0
    assert not product.piece_complete(F(1))
    with pytest.raises(WindowTooSmall):
        product.to_module((0, 2))


def test_tensor_with_zero_module(s1):
    product = external_tensor(s1, zero_module(1, s1.window))
    module = product.to_module(s1.window)
    assert module.total_dim() == 0


def test_morphism_kernel_cokernel(s1):
    # the canonical inclusion of polynomials into the localized module
    lo, hi = -4, 6
    dims = {F(c): 1 for c in range(lo, hi + 1)}
    zmaps = {(1, F(c)): Matrix(1, 1, [[1]]) for c in range(lo, hi)}
    dmaps = {(1, F(c)): Matrix(1, 1, [[c - 1]]) for c in range(lo + 1, hi + 1)}
    localized = MonodromicModule(1, 1, (lo, hi), dims, zmaps, dmaps, coset=0)
    assert validate_module(localized) == []
    source = build_example("STRUCTURE", (lo, hi))
    blocks = {
        F(c): Matrix(localized.dims[F(c)], source.dims[F(c)],
                     [[1]] if source.dims[F(c)] else [[]])
        for c in range(lo, hi + 1)
    }
    phi = ModuleMorphism(source, localized, blocks)
    kernel, cokernel = morphism_kernel_cokernel(phi)
    assert validate_module(kernel) == [] and validate_module(cokernel) == []
    assert kernel.total_dim() == 0
    assert all(cokernel.dims[F(c)] == (1 if c <= 0 else 0) for c in range(lo, hi + 1))
    # support lemma: kernel and cokernel vanish above zero, so the
    # morphism is invertible piece by piece there
    for c in range(1, hi + 1):
        if source.dims[F(c)]:
            assert phi.blocks[F(c)].rank() == source.dims[F(c)]


def test_morphism_identity_and_zero(s1):
    ident = ModuleMorphism(
        s1, s1, {chi: Matrix.identity(s1.dims[chi]) for chi in s1.grid}
    )
    kernel, cokernel = morphism_kernel_cokernel(ident)
    assert kernel.total_dim() == 0 and cokernel.total_dim() == 0
    zero = ModuleMorphism(s1, s1, {})
    kernel, cokernel = morphism_kernel_cokernel(zero)
    assert kernel.dims == s1.dims and cokernel.dims == s1.dims


def test_hodge_decomposition_detector():
    split = Flag(2, "inc", [(0, Subspace(2, [[1, 0]])), (1, Subspace.full(2))])
    assert hodge_decomposition_check([1, 1], split)
    mixed = Flag(2, "inc", [(0, Subspace(2, [[1, 1]])), (1, Subspace.full(2))])
    assert not hodge_decomposition_check([1, 1], mixed)


def test_window_too_small(s1):
    with pytest.raises(WindowTooSmall):
        s1.piece_dim(F(100))
    assert s1.known_dim(F(-100)) == 0  # support bound answers below
