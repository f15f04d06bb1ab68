from fractions import Fraction

import pytest

from monodromic.errors import WindowTooSmall
from monodromic.exactla import Matrix, Subspace
from monodromic.filtration import Flag, strictness_check, spectral_sequence_page
from monodromic.graded import (
    MonodromicModule,
    build_example,
    direct_sum,
    external_tensor,
)
from monodromic.koszul import (
    build_koszul,
    build_koszul_blocks,
    complex_homology,
    full_window_restriction_dims,
    hodge_formula_check,
    koszul_homotopy_check,
    restrict,
    specialization_hodge,
    support_criteria,
)

F = Fraction


@pytest.fixture(scope="module")
def s1():
    return build_example("STRUCTURE", (-7, 8))


@pytest.fixture(scope="module")
def d1():
    return build_example("DELTA", (-8, 7))


@pytest.fixture(scope="module")
def kummer():
    return build_example("KUMMER", (F(-11, 2), F(13, 2)), lam=F(1, 2))


def test_raising_complex_examples(s1, d1):
    b2 = build_koszul(s1, "B", 2)
    assert b2.terms == {0: 1, 1: 1}
    assert b2.differential(0) == Matrix(1, 1, [[1]])
    assert b2.is_exact()
    b0 = build_koszul(s1, "B", 0)
    assert b0.homology_dims() == {0: 0, 1: 1}
    assert build_koszul(d1, "B", 0).homology_dims() == {0: 1, 1: 0}


def test_lowering_complex_examples(s1, d1):
    c0 = build_koszul(d1, "C", 0)
    assert c0.homology_dims() == {-1: 0, 0: 1}
    c0s = build_koszul(s1, "C", 0)
    assert c0s.homology_dims() == {-1: 1, 0: 0}


def test_kummer_everything_exact(kummer):
    assert build_koszul(kummer, "B", F(1, 2)).is_exact()
    assert build_koszul(kummer, "C", F(1, 2)).is_exact()
    assert build_koszul(kummer, "B", 0).terms == {0: 0, 1: 0}


def test_exactness_sweep(s1, d1):
    for module in (s1, d1):
        lo, hi = module.window
        chi = lo
        while chi <= hi - 1:
            if chi != 0:
                assert build_koszul(module, "B", chi).is_exact(), chi
                assert build_koszul(module, "C", chi).is_exact(), chi
            chi += 1


def test_rank_two_zero_value(s1):
    s2 = build_example("STRUCTURE", (-1, 10), rank=2)
    assert build_koszul(s2, "B", 0).homology_dims() == {0: 0, 1: 0, 2: 1}
    d2 = build_example("DELTA", (-10, 2), rank=2)
    assert build_koszul(d2, "B", 0).homology_dims() == {0: 1, 1: 0, 2: 0}
    assert build_koszul(d2, "C", 0).homology_dims() == {-2: 0, -1: 0, 0: 1}


def test_homotopy_identity_examples(d1):
    s2 = build_example("STRUCTURE", (-1, 10), rank=2)
    assert koszul_homotopy_check(s2, 3, "B")
    assert koszul_homotopy_check(d1, -1, "B")
    assert koszul_homotopy_check(d1, -1, "C")


def test_homotopy_detects_corruption(d1):
    bad_maps = dict(d1.dmaps)
    bad_maps[(1, F(0))] = Matrix(1, 1, [[5]])
    broken = MonodromicModule(1, 1, d1.window, d1.dims, d1.zmaps, bad_maps)
    assert not koszul_homotopy_check(broken, -1, "B")


def test_tail_complex_staircase(s1, d1):
    for chi in (1, 2, 3):
        assert build_koszul(s1, "A", chi).is_exact()
    assert build_koszul(d1, "A", 1).is_exact()
    with pytest.raises(WindowTooSmall):
        build_koszul(s1, "A", s1.window[1])


def test_restrict_examples(d1, kummer):
    star = restrict(d1, "star")
    assert star["dims"] == {-1: 0, 0: 1}
    shriek = restrict(d1, "shriek")
    assert shriek["dims"] == {0: 1, 1: 0}
    assert shriek["flag_authoritative"]
    both = restrict(kummer, "star")
    assert all(v == 0 for v in both["dims"].values())


def test_restrict_matches_full_window(s1, d1, kummer):
    for module in (s1, d1, kummer, direct_sum(s1, d1)):
        for kind in ("shriek", "star"):
            got = {k: v for k, v in restrict(module, kind)["dims"].items() if v}
            want = {
                k: v
                for k, v in full_window_restriction_dims(module, kind).items()
                if v
            }
            assert got == want, (module.metadata, kind)


def test_support_criteria(s1, d1):
    rep = support_criteria(s1)
    assert rep["no_sub_supported"] and rep["splits"]
    assert rep["quotient_supported"].total_dim() == 0
    rep = support_criteria(d1)
    assert not rep["no_sub_supported"]
    assert rep["splits"]
    assert rep["quotient_supported"].dims[F(0)] == 1
    rep = support_criteria(direct_sum(s1, d1))
    assert rep["splits"]


def test_hodge_formula_check(s1, d1):
    assert hodge_formula_check(s1)["ok"]
    assert hodge_formula_check(d1)["ok"]
    s2 = build_example("STRUCTURE", (-2, 9), rank=2)
    assert hodge_formula_check(s2)["ok"]


def test_hodge_formula_detects_corruption(d1):
    hodge = dict(d1.hodge)
    hodge[F(-2)] = Flag.single_jump(1, "inc", 0)  # too early for this piece
    broken = MonodromicModule(
        1, 1, d1.window, d1.dims, d1.zmaps, d1.dmaps, hodge,
        support_max=0, coset=0,
    )
    report = hodge_formula_check(broken)
    assert not report["ok"]


def test_specialization_nonnegative_case(s1):
    table = specialization_hodge(s1, 0, 0)
    for (ell, chi), space in table.items():
        d = s1.dims[chi]
        if not d:
            continue
        cutoff = -ell  # gamma - ell + rank - 1 with gamma 0, rank 1
        expected = s1.hodge_flag(chi).value_at(1) if chi >= cutoff else Subspace.zero(d)
        assert space == expected


def test_specialization_negative_case_grows(d1):
    # at gamma = -1 the correction term reaches one piece deeper than the
    # leading term: at (ell, chi) = (1, -2) and large p the table entry is
    # nonzero while the naive leading term vanishes
    table = specialization_hodge(d1, -1, 5)
    space = table[(1, F(-2))]
    assert space.dim == 1
    # the leading term alone reaches only chi >= -1, so the entry at
    # chi = -2 comes entirely from the q = 1 correction
    assert F(-2) < F(-1)


def test_zero_module_specialization():
    from monodromic.graded import zero_module

    table = specialization_hodge(
        MonodromicModule(1, 1, (-2, 2), {}, {}, {},
                         hodge={}, support_min=0, support_max=0),
        0, 0,
    )
    assert all(space.dim == 0 for space in table.values())


def test_tensor_blocks_kunneth(s1, d1):
    product = external_tensor(s1, d1)
    for chi in (-1, 1):
        for variant in ("B", "C"):
            blocks = build_koszul_blocks(product, variant, chi)
            assert blocks
            for pair, comp in blocks.items():
                assert comp.is_exact(), (pair, variant, chi)
        assert koszul_homotopy_check(product, chi, "B")
    got = {k: v for k, v in restrict(product, "star")["dims"].items() if v}
    assert got == {-1: 1}


def test_filtered_subcomplexes(s1, d1):
    for module in (s1, d1):
        comp = build_koszul(module, "A", 1, filtered="F")
        for p in comp.flag_indices("F"):
            assert comp.flag_subcomplex("F", p).is_exact()
        comp = build_koszul(module, "C", -1, filtered="F")
        for p in comp.flag_indices("F"):
            assert comp.flag_subcomplex("F", p).is_exact()
        comp = build_koszul(module, "B", 0, filtered="F")
        assert strictness_check(comp, "F")


def test_weight_pages_jordan():
    jordan = build_example("JORDAN", (-5, 6), size=2)
    comp = build_koszul(jordan, "B", 0, filtered="W")
    pages = [spectral_sequence_page(comp, r, "W") for r in (2, 3, 10)]
    assert pages[0] == pages[1] == pages[2]


def test_complex_homology_flags(d1):
    comp = build_koszul(d1, "B", 0, filtered="F")
    result = complex_homology(comp, with_flag="F")
    assert result["dims"] == {0: 1, 1: 0}
    assert result["strict"]
    assert result["flag_dims"][0]
