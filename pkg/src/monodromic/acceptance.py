"""The embedded acceptance corpus and its check suite.

Every check here builds its own inputs from the example families, so the
suite runs with no external files.  Each criterion function returns
(ok, detail) and the registry maps stable check names to them; both the
command-line `corpus` command and the test suite drive this module.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .exactla import Matrix, Subspace
from .filtration import (
    DeligneSystem,
    Flag,
    NONEXISTENT,
    bigrading_dims,
    deligne_splitting,
    integer_eigenspaces,
    monodromy_filtration,
    relative_monodromy_filtration,
    spectral_sequence_page,
    strictness_check,
    weight_conditions_hold,
)
from .fourier import fl_transform, inversion_check, oracle_fl_hodge
from .graded import (
    MonodromicModule,
    ProductModule,
    build_example,
    direct_sum,
    external_tensor,
    grid_range,
    hodge_decomposition_check,
    is_pure_eigen,
    validate_module,
    weight_lowering_property,
)
from .koszul import (
    build_koszul,
    build_koszul_blocks,
    full_window_restriction_dims,
    koszul_block_pairs,
    koszul_homotopy_check,
    restrict,
    specialization_hodge,
    hodge_formula_check,
)
from .fourier import (
    build_graph_module,
    kernel_lemma_check,
    phi_relations_check,
    vfiltration_axiom_check,
    vfiltration_candidate,
)


def corpus() -> dict:
    """The acceptance corpus; windows leave full margins around zero."""
    s1 = build_example("STRUCTURE", (-7, 8))
    d1 = build_example("DELTA", (-8, 7))
    return {
        "STRUCTURE(1)": s1,
        "STRUCTURE(2)": build_example("STRUCTURE", (-6, 9), rank=2),
        "DELTA(1)": d1,
        "DELTA(2)": build_example("DELTA", (-9, 6), rank=2),
        "KUMMER(1/2)": build_example(
            "KUMMER", (Fraction(-11, 2), Fraction(13, 2)), lam=Fraction(1, 2)
        ),
        "JORDAN(2)": build_example("JORDAN", (-5, 6), size=2),
        "STRUCTURE(1)+DELTA(1)": direct_sum(s1, d1),
        "STRUCTURE(1)xDELTA(1)": external_tensor(s1, d1),
        "KUMMER(1/2)xKUMMER(1/2)": external_tensor(
            build_example("KUMMER", (Fraction(-11, 2), Fraction(13, 2)), lam=Fraction(1, 2)),
            build_example("KUMMER", (Fraction(-11, 2), Fraction(13, 2)), lam=Fraction(1, 2)),
        ),
    }


def hodge_subcorpus_names() -> list[str]:
    return [
        "STRUCTURE(1)",
        "STRUCTURE(2)",
        "DELTA(1)",
        "DELTA(2)",
        "STRUCTURE(1)+DELTA(1)",
        "STRUCTURE(1)xDELTA(1)",
    ]


def _plain_chis(m: MonodromicModule, margin_low: int = 0) -> list:
    lo, hi = m.window
    return [
        chi
        for chi in grid_range(lo + margin_low, hi - m.rank, m.denominator)
    ]


def check_koszul_exactness() -> tuple[bool, dict]:
    """Criterion 1: B and C vanish away from zero; at zero they agree
    with the whole-window computation."""
    detail = {}
    ok = True
    for name, mod in corpus().items():
        if isinstance(mod, ProductModule):
            bad = []
            for chi in grid_range(-3, 3, mod.denominator):
                if chi == 0:
                    continue
                for variant in ("B", "C"):
                    for pair, comp in build_koszul_blocks(mod, variant, chi).items():
                        if not comp.is_exact():
                            bad.append((variant, str(chi), str(pair)))
            got = {
                kind: {k: v for k, v in restrict(mod, kind)["dims"].items() if v}
                for kind in ("shriek", "star")
            }
            want = {}
            for kind in ("shriek", "star"):
                f1 = full_window_restriction_dims(mod.f1, kind)
                f2 = full_window_restriction_dims(mod.f2, kind)
                table = {}
                for a, x in f1.items():
                    for b, y in f2.items():
                        if x and y:
                            table[a + b] = table.get(a + b, 0) + x * y
                want[kind] = table
            zero_ok = got == want
            detail[name] = {"nonzero_failures": bad, "zero_matches": zero_ok}
            ok = ok and not bad and zero_ok
            continue
        bad = []
        for chi in _plain_chis(mod):
            if chi == 0:
                continue
            for variant in ("B", "C"):
                if not build_koszul(mod, variant, chi).is_exact():
                    bad.append((variant, str(chi)))
        zero_ok = True
        for kind in ("shriek", "star"):
            got = {k: v for k, v in restrict(mod, kind)["dims"].items() if v}
            want = {k: v for k, v in full_window_restriction_dims(mod, kind).items() if v}
            if got != want:
                zero_ok = False
        detail[name] = {"nonzero_failures": bad, "zero_matches": zero_ok}
        ok = ok and not bad and zero_ok
    return ok, detail


def check_homotopy_identity() -> tuple[bool, dict]:
    """Criterion 2: the contracting homotopy identity, every module and value."""
    detail = {}
    ok = True
    for name, mod in corpus().items():
        bad = []
        if isinstance(mod, ProductModule):
            values = grid_range(-3, 3, mod.denominator)
        else:
            lo, hi = mod.window
            values = grid_range(lo + 1, hi - mod.rank - 1, mod.denominator)
        for chi in values:
            if not koszul_homotopy_check(mod, chi, "B"):
                bad.append(str(chi))
        detail[name] = bad
        ok = ok and not bad
    return ok, detail


def check_tail_exactness() -> tuple[bool, dict]:
    """Criterion 3: the truncated-tail complex is exact on the positive side."""
    detail = {}
    ok = True
    for name, mod in corpus().items():
        bad = []
        if isinstance(mod, ProductModule):
            for chi in grid_range(1, 3, mod.denominator):
                for pair, comp in build_koszul_blocks(mod, "A", chi).items():
                    if not comp.is_exact():
                        bad.append((str(chi), str(pair)))
        else:
            hi = mod.window[1]
            for chi in grid_range(Fraction(1, mod.denominator), hi - mod.rank, mod.denominator):
                if not build_koszul(mod, "A", chi).is_exact():
                    bad.append(str(chi))
        detail[name] = bad
        ok = ok and not bad
    return ok, detail


def check_filtered_acyclicity() -> tuple[bool, dict]:
    """Criterion 4: level subcomplexes of A (positive side) and C
    (negative side) are exact on the Hodge sub-corpus."""
    detail = {}
    ok = True
    mods = corpus()
    for name in hodge_subcorpus_names():
        mod = mods[name]
        bad = []
        if isinstance(mod, ProductModule):
            for chi in (1, 2):
                for pair, comp in build_koszul_blocks(mod, "A", chi, filtered="F").items():
                    for p in comp.flag_indices("F"):
                        if not comp.flag_subcomplex("F", p).is_exact():
                            bad.append(("A", chi, str(pair), str(p)))
            for chi in (-1, -2):
                for pair, comp in build_koszul_blocks(mod, "C", chi, filtered="F").items():
                    for p in comp.flag_indices("F"):
                        if not comp.flag_subcomplex("F", p).is_exact():
                            bad.append(("C", chi, str(pair), str(p)))
        else:
            for chi in (1, 2):
                comp = build_koszul(mod, "A", chi, filtered="F")
                for p in comp.flag_indices("F"):
                    if not comp.flag_subcomplex("F", p).is_exact():
                        bad.append(("A", chi, str(p)))
            for chi in (-1, -2):
                comp = build_koszul(mod, "C", chi, filtered="F")
                for p in comp.flag_indices("F"):
                    if not comp.flag_subcomplex("F", p).is_exact():
                        bad.append(("C", chi, str(p)))
        detail[name] = bad
        ok = ok and not bad
    return ok, detail


def check_strictness_degeneration() -> tuple[bool, dict]:
    """Criterion 5: strictness of the zero-value complexes with Hodge
    flags, and second-page degeneration of the weight pages."""
    detail = {}
    ok = True
    mods = corpus()
    for name in hodge_subcorpus_names():
        mod = mods[name]
        entry = {}
        if isinstance(mod, ProductModule):
            strict = True
            for variant in ("B", "C"):
                for pair, comp in build_koszul_blocks(mod, variant, 0, filtered="F").items():
                    if not strictness_check(comp, "F"):
                        strict = False
            entry["strict"] = strict
            weight_ok = True
            for variant in ("B", "C"):
                for pair, comp in build_koszul_blocks(mod, variant, 0, filtered="W").items():
                    pages = [spectral_sequence_page(comp, rr, "W") for rr in (2, 3, 10)]
                    if not (pages[0] == pages[1] == pages[2]):
                        weight_ok = False
            entry["weight_degenerates"] = weight_ok
        else:
            entry["strict"] = all(
                strictness_check(build_koszul(mod, v, 0, filtered="F"), "F")
                for v in ("B", "C")
            )
            weight_ok = True
            for variant in ("B", "C"):
                comp = build_koszul(mod, variant, 0, filtered="W")
                pages = [spectral_sequence_page(comp, rr, "W") for rr in (2, 3, 10)]
                if not (pages[0] == pages[1] == pages[2]):
                    weight_ok = False
            entry["weight_degenerates"] = weight_ok
        detail[name] = entry
        ok = ok and entry["strict"] and entry["weight_degenerates"]
    jordan = mods["JORDAN(2)"]
    comp = build_koszul(jordan, "B", 0, filtered="W")
    pages = [spectral_sequence_page(comp, rr, "W") for rr in (2, 3, 10)]
    detail["JORDAN(2) raising complex"] = pages[0] == pages[1] == pages[2]
    ok = ok and detail["JORDAN(2) raising complex"]
    return ok, detail


def check_fourier_oracle() -> tuple[bool, dict]:
    """Criterion 6: the graph-model oracle reproduces the closed-form
    filtration tables, and the transform of the polynomial module is the
    point-supported module with its push-forward flags."""
    detail = {}
    ok = True
    cases = {
        "STRUCTURE(1)": build_example("STRUCTURE", (-4, 7)),
        "DELTA(1)": build_example("DELTA", (-7, 4)),
        "KUMMER(1/2)": build_example(
            "KUMMER", (Fraction(-9, 2), Fraction(11, 2)), lam=Fraction(1, 2)
        ),
        "DELTA(2)": build_example("DELTA", (-6, 3), rank=2),
    }
    for name, mod in cases.items():
        table = oracle_fl_hodge(mod, 4, 4)
        closed = fl_transform(mod)
        mismatches = []
        checked = 0
        for (p, cp), space in sorted(table.items()):
            dim = closed.dims.get(cp)
            if not dim:
                continue
            checked += 1
            if space != closed.hodge_flag(cp).value_at(p):
                mismatches.append((p, str(cp)))
        detail[name] = {"checked": checked, "mismatches": mismatches}
        ok = ok and checked > 0 and not mismatches
    s1 = build_example("STRUCTURE", (-7, 8))
    image = fl_transform(s1)
    delta = build_example("DELTA", (1 - 8, 1 + 7))
    same = image.window == delta.window and image.dims == delta.dims
    if same:
        for chi in image.grid:
            if image.dims[chi] and image.hodge_flag(chi) != delta.hodge_flag(chi):
                same = False
    detail["transform of STRUCTURE(1) is DELTA(1) with its flags"] = same
    ok = ok and same
    return ok, detail


def check_vfiltration_construction() -> tuple[bool, dict]:
    """Criterion 7: candidate filtration passes its axioms; containment
    and kernel statements hold exactly on safe cells."""
    detail = {}
    ok = True
    cases = {
        "STRUCTURE(1)": (build_example("STRUCTURE", (-4, 7)), [Fraction(0), Fraction(1, 2)]),
        "DELTA(1)": (build_example("DELTA", (-7, 4)), [Fraction(0), Fraction(1, 2)]),
        "JORDAN(2)": (build_example("JORDAN", (-4, 5), size=2), [Fraction(0)]),
        "KUMMER(1/2)": (
            build_example("KUMMER", (Fraction(-9, 2), Fraction(11, 2)), lam=Fraction(1, 2)),
            [Fraction(1, 2)],
        ),
        "DELTA(2)": (build_example("DELTA", (-6, 3), rank=2), [Fraction(0)]),
    }
    for name, (mod, lams) in cases.items():
        gm = build_graph_module(mod, 3, 3)
        entry = {}
        for lam in lams:
            u0, u1 = vfiltration_candidate(gm, lam)
            report = vfiltration_axiom_check(gm, lam, u0, u1)
            entry[str(lam)] = {
                k: v for k, v in report.items() if k != "containment_failures"
            }
            entry[str(lam)]["containment_failures"] = len(report["containment_failures"])
            ok = ok and report["ok"]
        kernel_ok = True
        r = mod.rank
        for ell in (0, 1):
            beta = Fraction(1) if name != "KUMMER(1/2)" else Fraction(1, 2)
            try:
                if not kernel_lemma_check(gm, beta, ell):
                    kernel_ok = False
            except Exception:
                kernel_ok = False
        entry["kernel_lemma"] = kernel_ok
        phi_ok = all(
            phi_relations_check(gm, beta, ell)
            for beta in ([Fraction(0), Fraction(1)] if mod.coset == 0 else [Fraction(1, 2)])
            for ell in (0, 1)
        )
        entry["phi_relations"] = phi_ok
        detail[name] = entry
        ok = ok and kernel_ok and phi_ok
    return ok, detail


def check_fourier_inversion() -> tuple[bool, dict]:
    """Criterion 8: the inverse transform undoes the transform exactly,
    matrices and both flag families alike."""
    detail = {}
    ok = True
    for name, mod in corpus().items():
        good = inversion_check(mod)
        detail[name] = good
        ok = ok and good
    return ok, detail


def _random_nilpotent(rng: random.Random, dim: int) -> Matrix:
    upper = [
        [rng.choice([-2, -1, 0, 1, 2, 3]) if j > i else 0 for j in range(dim)]
        for i in range(dim)
    ]
    n = Matrix(dim, dim, upper)
    g = _random_unimodular(rng, dim)
    from .filtration import _invert

    return g @ n @ _invert(g)


def _random_unimodular(rng: random.Random, dim: int) -> Matrix:
    m = Matrix.identity(dim)
    for _ in range(dim):
        i = rng.randrange(dim)
        j = rng.randrange(dim)
        if i == j:
            continue
        c = rng.choice([-1, 1])
        elementary = [
            [1 if a == b else (c if (a, b) == (i, j) else 0) for b in range(dim)]
            for a in range(dim)
        ]
        m = m @ Matrix(dim, dim, elementary)
    return m


def _random_split_system(rng: random.Random):
    """An admissible grading system with a random lowering perturbation."""
    summands = []
    count = rng.randrange(2, 4)
    for _ in range(count):
        weight = rng.randrange(0, 2)  # sl2 top weight; dim = weight + 1
        level = rng.choice([0, 2, 4])
        summands.append((weight, level))
    dim = sum(w + 1 for w, _ in summands)
    n_grid = [[Fraction(0)] * dim for _ in range(dim)]
    y_grid = [[Fraction(0)] * dim for _ in range(dim)]
    yp_grid = [[Fraction(0)] * dim for _ in range(dim)]
    at = 0
    slots = []  # (position, y_weight, level)
    for weight, level in summands:
        for t in range(weight + 1):
            h_weight = weight - 2 * t
            y_grid[at + t][at + t] = h_weight + level
            yp_grid[at + t][at + t] = level
            slots.append((at + t, h_weight + level, level))
            if t + 1 <= weight:
                n_grid[at + t + 1][at + t] = 1  # lowering within the summand
        at += weight + 1
    # random admissible perturbation: lowers level, drops Y-weight by 2
    for (pos_a, ya, la) in slots:
        for (pos_b, yb, lb) in slots:
            if lb < la and yb == ya - 2 and rng.random() < 0.4:
                n_grid[pos_b][pos_a] = Fraction(rng.choice([-1, 1, 2]))
    n = Matrix(dim, dim, n_grid)
    y = Matrix(dim, dim, y_grid)
    yp = Matrix(dim, dim, yp_grid)
    levels = sorted({level for _, level in summands})
    steps = []
    for level in levels:
        vectors = []
        for (pos, _, lv) in slots:
            if lv <= level:
                v = [Fraction(0)] * dim
                v[pos] = 1
                vectors.append(v)
        steps.append((level, Subspace(dim, vectors)))
    lflag = Flag(dim, "inc", steps)
    return DeligneSystem(lflag, n, y), yp


def check_filtration_algorithms() -> tuple[bool, dict]:
    """Criterion 9: weight filtrations of random nilpotents verify their
    defining conditions; the relative version with a zero operator is the
    input filtration; splitting operators satisfy their invariants, are
    seed-independent on bigradings, and are functorial."""
    rng = random.Random(20260810)
    detail = {}
    failures = 0
    for _ in range(200):
        dim = rng.randrange(1, 9)
        n = _random_nilpotent(rng, dim)
        center = rng.randrange(-2, 3)
        flag = monodromy_filtration(n, center)
        if not weight_conditions_hold(n, flag, center):
            failures += 1
    detail["random_weight_filtrations_failures"] = failures
    ok = failures == 0

    rel_ok = True
    for _ in range(25):
        dim = rng.randrange(1, 6)
        cuts = sorted(rng.sample(range(-3, 4), rng.randrange(1, 3)))
        steps = []
        used = 0
        for c in cuts:
            used = min(dim, used + rng.randrange(0, dim + 1))
            vectors = [[1 if t == i else 0 for t in range(dim)] for i in range(used)]
            steps.append((c, Subspace(dim, vectors)))
        steps.append((cuts[-1] + 1, Subspace.full(dim)))
        lflag = Flag(dim, "inc", steps)
        if relative_monodromy_filtration(Matrix.zero(dim, dim), lflag) != lflag:
            rel_ok = False
    detail["zero_operator_returns_input"] = rel_ok
    ok = ok and rel_ok

    splitting_ok = True
    functorial_ok = True
    seed_independent = True
    morphisms = 0
    attempts = 0
    while morphisms < 50 and attempts < 400:
        attempts += 1
        system, seed = _random_split_system(rng)
        try:
            yprime = deligne_splitting(system, seed)
        except Exception:
            continue
        completed = DeligneSystem(system.lflag, system.n, system.y, yprime)
        if completed.violations():
            splitting_ok = False
        # second seed: conjugate by a degree-zero, level-lowering unipotent
        gamma_grid = [[Fraction(0)] * system.dim for _ in range(system.dim)]
        eig_y = integer_eigenspaces(system.y)
        eig_l = integer_eigenspaces(seed)
        pairs = []
        for ly, sy in eig_y.items():
            for ll, sl in eig_l.items():
                meet = sy.intersect(sl)
                if meet.dim:
                    pairs.append((ly, ll, meet))
        for (y1, l1, s1) in pairs:
            for (y2, l2, s2) in pairs:
                if y1 == y2 and l2 < l1 and rng.random() < 0.5:
                    v_from = s1.basis_vectors()[0]
                    v_to = s2.basis_vectors()[0]
                    for a in range(system.dim):
                        for b in range(system.dim):
                            gamma_grid[a][b] += v_to[a] * v_from[b]
        gamma = Matrix(system.dim, system.dim, gamma_grid)
        if gamma.is_nilpotent() and not gamma.is_zero():
            from .filtration import _nilpotent_inverse

            g = Matrix.identity(system.dim) + gamma
            seed2 = g @ seed @ _nilpotent_inverse(gamma)
            try:
                yprime2 = deligne_splitting(system, seed2)
            except Exception:
                yprime2 = None
            if yprime2 is not None:
                if bigrading_dims(system.y, yprime) != bigrading_dims(system.y, yprime2):
                    seed_independent = False
        # functoriality along the diagonal embedding into the doubled system
        doubled = DeligneSystem(
            _double_flag(system.lflag),
            _double_matrix(system.n),
            _double_matrix(system.y),
        )
        try:
            yprime_d = deligne_splitting(doubled, _double_matrix(seed))
        except Exception:
            continue
        a = Fraction(rng.choice([1, 2, -1]))
        b = Fraction(rng.choice([0, 1, 3]))
        t_grid = [[Fraction(0)] * system.dim for _ in range(2 * system.dim)]
        for t in range(system.dim):
            t_grid[t][t] = a
            t_grid[system.dim + t][t] = b
        t_map = Matrix(2 * system.dim, system.dim, t_grid)
        if yprime_d @ t_map != t_map @ yprime:
            functorial_ok = False
        morphisms += 1
    detail["splitting_invariants"] = splitting_ok
    detail["seed_independent_bigradings"] = seed_independent
    detail["functorial_morphisms_checked"] = morphisms
    detail["functorial"] = functorial_ok
    ok = ok and splitting_ok and functorial_ok and seed_independent and morphisms >= 50
    return ok, detail


def _double_matrix(m: Matrix) -> Matrix:
    dim = m.rows
    grid = [[Fraction(0)] * (2 * dim) for _ in range(2 * dim)]
    for i in range(dim):
        for j in range(dim):
            grid[i][j] = m.entries[i][j]
            grid[dim + i][dim + j] = m.entries[i][j]
    return Matrix(2 * dim, 2 * dim, grid)


def _double_flag(flag: Flag) -> Flag:
    dim = flag.ambient_dim
    steps = []
    for k, s in flag.steps:
        vectors = []
        for v in s.basis_vectors():
            vectors.append(list(v) + [Fraction(0)] * dim)
            vectors.append([Fraction(0)] * dim + list(v))
        steps.append((k, Subspace(2 * dim, vectors)))
    return Flag(2 * dim, "inc", steps)


def check_weight_structure() -> tuple[bool, dict]:
    """Criterion 10: weights drop by two under the Euler nilpotent, pure
    members have exact eigenvalues, and the splitting detector works."""
    detail = {}
    ok = True
    mods = corpus()
    for name, mod in mods.items():
        if isinstance(mod, ProductModule):
            continue
        if mod.weight is not None:
            good = weight_lowering_property(mod)
            detail[f"{name} weight drop"] = good
            ok = ok and good
    for name in ("STRUCTURE(1)", "STRUCTURE(2)", "DELTA(1)", "DELTA(2)", "KUMMER(1/2)"):
        good = is_pure_eigen(mods[name])
        detail[f"{name} pure"] = good
        ok = ok and good
    detail["JORDAN(2) not pure"] = not is_pure_eigen(mods["JORDAN(2)"])
    ok = ok and detail["JORDAN(2) not pure"]
    # splitting detector on a valid flag and on an injected counterexample
    split_flag = Flag(
        2,
        "inc",
        [(0, Subspace(2, [[1, 0]])), (1, Subspace.full(2))],
    )
    good = hodge_decomposition_check([1, 1], split_flag)
    mixed_flag = Flag(
        2,
        "inc",
        [(0, Subspace(2, [[1, 1]])), (1, Subspace.full(2))],
    )
    flagged = not hodge_decomposition_check([1, 1], mixed_flag)
    detail["detector passes valid"] = good
    detail["detector flags non-split"] = flagged
    ok = ok and good and flagged
    return ok, detail


def check_hodge_formulas() -> tuple[bool, dict]:
    """Criterion 11: the saturation and span identities in both ranks,
    and the nonnegative-case specialization table."""
    detail = {}
    ok = True
    cases = {
        "STRUCTURE(1)": build_example("STRUCTURE", (-7, 8)),
        "STRUCTURE(2)": build_example("STRUCTURE", (-6, 9), rank=2),
        "DELTA(1)": build_example("DELTA", (-8, 7)),
        "DELTA(2)": build_example("DELTA", (-9, 6), rank=2),
    }
    for name, mod in cases.items():
        report = hodge_formula_check(mod)
        detail[name] = report["ok"]
        ok = ok and report["ok"]
    spec_ok = True
    for name, mod in cases.items():
        for gamma in (0, 1):
            for p in (0, 1, 3):
                table = specialization_hodge(mod, gamma, p)
                for (ell, chi), space in table.items():
                    d = mod.dims[chi]
                    if d == 0:
                        continue
                    cutoff = gamma - ell + mod.rank - 1
                    expected = (
                        mod.hodge_flag(chi).value_at(p + 1)
                        if chi >= cutoff
                        else Subspace.zero(d)
                    )
                    if space != expected:
                        spec_ok = False
    detail["specialization closed form"] = spec_ok
    ok = ok and spec_ok
    return ok, detail


CRITERIA = [
    ("koszul-exactness", check_koszul_exactness),
    ("homotopy-identity", check_homotopy_identity),
    ("tail-exactness", check_tail_exactness),
    ("filtered-acyclicity", check_filtered_acyclicity),
    ("strictness-degeneration", check_strictness_degeneration),
    ("fourier-oracle", check_fourier_oracle),
    ("vfiltration-construction", check_vfiltration_construction),
    ("fourier-inversion", check_fourier_inversion),
    ("filtration-algorithms", check_filtration_algorithms),
    ("weight-structure", check_weight_structure),
    ("hodge-formulas", check_hodge_formulas),
]


def run_all() -> list[tuple[str, bool, dict, float]]:
    import time

    out = []
    for name, func in CRITERIA:
        start = time.monotonic()
        ok, detail = func()
        out.append((name, ok, detail, time.monotonic() - start))
    return out
