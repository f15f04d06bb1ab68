"""Exact computations with graded module windows over Weyl algebras."""

from .exactla import Matrix, Rational, Subspace, kernel_basis, rat, rat_str, row_reduce
from .filtration import (
    DeligneSystem,
    Flag,
    NONEXISTENT,
    bistrictness_check,
    deligne_splitting,
    monodromy_filtration,
    relative_monodromy_filtration,
    sl2_primitive_decomposition,
    spectral_sequence_page,
    strictness_check,
    weight_conditions_hold,
)
from .complexes import FilteredComplex, tensor_complex
from .graded import (
    ModuleMorphism,
    MonodromicModule,
    ProductModule,
    apply_antipodal,
    build_example,
    direct_sum,
    external_tensor,
    hodge_decomposition_check,
    morphism_kernel_cokernel,
    tate_twist,
    validate_module,
    zero_section_vfiltration,
)
from .koszul import (
    build_koszul,
    complex_homology,
    hodge_formula_check,
    koszul_homotopy_check,
    restrict,
    specialization_hodge,
    support_criteria,
)
from .fourier import (
    GraphModule,
    build_graph_module,
    fl_transform,
    inverse_fl,
    inversion_check,
    kernel_lemma_check,
    oracle_fl_hodge,
    phi_map,
    vfiltration_axiom_check,
    vfiltration_candidate,
)

__version__ = "0.1.0"
