"""Koszul-type complexes on graded-module windows and their consumers.

Three complexes are attached to a module window and a grid value chi: the
raising-map complex on truncated tails (variant A), its graded quotient on
single pieces (variant B), and the lowering-map complex (variant C).  The
zero-value B and C complexes compute the two restrictions to the origin;
nonzero values give exact complexes, which is itself a tested property.

Tensor products of windows are handled in factored form: every complex of
a product splits into blocks indexed by factor eigenvalue pairs, and each
block is the total complex of a tensor of factor complexes.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations

from .complexes import FilteredComplex, tensor_complex
from .errors import WindowTooSmall
from .exactla import Matrix, Subspace, rat
from .filtration import Flag, relative_monodromy_filtration, NONEXISTENT, strictness_check
from .graded import MonodromicModule, ProductModule, grid_range


def _subsets(r: int, k: int) -> list[tuple[int, ...]]:
    return list(combinations(range(1, r + 1), k))


def _wedge_insert(i: int, subset: tuple[int, ...]):
    """(sign, subset + {i}) for e_i wedged in front, or None if i in subset."""
    if i in subset:
        return None
    smaller = sum(1 for j in subset if j < i)
    merged = tuple(sorted(subset + (i,)))
    return (-1) ** smaller, merged


def _wedge_remove(j: int, subset: tuple[int, ...]):
    """(sign, subset - {j}) for contraction, or None if j not in subset."""
    if j not in subset:
        return None
    position = subset.index(j)
    reduced = subset[:position] + subset[position + 1 :]
    return (-1) ** position, reduced


def _assemble(blocks: dict, row_layout, col_layout, row_dims, col_dims) -> Matrix:
    rows = sum(row_dims[t] for t in row_layout)
    cols = sum(col_dims[t] for t in col_layout)
    row_off = {}
    at = 0
    for t in row_layout:
        row_off[t] = at
        at += row_dims[t]
    col_off = {}
    at = 0
    for t in col_layout:
        col_off[t] = at
        at += col_dims[t]
    grid = [[Fraction(0)] * cols for _ in range(rows)]
    for (rt, ct), (sign, mat) in blocks.items():
        r0, c0 = row_off[rt], col_off[ct]
        for i in range(mat.rows):
            for j in range(mat.cols):
                if mat.entries[i][j]:
                    grid[r0 + i][c0 + j] = grid[r0 + i][c0 + j] + sign * mat.entries[i][j]
    return Matrix(rows, cols, grid)


def _piece_flag_sum(flag: Flag, copies: int, total_dim: int) -> Flag:
    """The flag on a direct sum of `copies` identical pieces."""
    steps = []
    for p in flag.jumps():
        step = flag.value_at(p)
        vectors = []
        for c in range(copies):
            for v in step.basis_vectors():
                padded = [Fraction(0)] * total_dim
                padded[c * flag.ambient_dim : (c + 1) * flag.ambient_dim] = v
                vectors.append(padded)
        steps.append((p, Subspace(total_dim, vectors)))
    return Flag(total_dim, "inc", steps)


def _weight_flag_for_piece(m: MonodromicModule, chi, weight_shift: int) -> Flag:
    """Relative monodromy flag of the Euler nilpotent against the weight
    filtration on one piece."""
    chi = rat(chi)
    d = m.dims[chi]
    if d == 0:
        return Flag(0, "inc", [])
    n = m.euler_zd(chi) - Matrix.scalar(d, chi - m.rank)
    lflag = m.weight_flag(chi).shift(-weight_shift)
    w = relative_monodromy_filtration(n, lflag)
    if w is NONEXISTENT:
        raise ValueError(f"relative monodromy filtration does not exist at {chi}")
    return w


def build_koszul(
    m: MonodromicModule,
    variant: str,
    chi,
    filtered: str | None = None,
    weight_shift: int = 0,
) -> FilteredComplex:
    """The complex of the given variant at grid value chi.

    Hodge flags ("F") are attached with the variant's shifts baked in:
    A and B carry a uniform shift by the rank on every term, C carries a
    stepwise shift.  Weight flags ("W") are induced per piece by the
    relative monodromy filtration, with an adjustable index shift.
    """
    variant = variant.upper()
    chi = rat(chi)
    r = m.rank
    if variant not in ("A", "B", "C"):
        raise ValueError("variant must be A, B or C")
    flags: dict = {}
    if not (m.window[0] <= chi and chi + r <= m.window[1]):
        raise WindowTooSmall(f"variant {variant} at {chi} needs pieces {chi}..{chi + r}")

    if variant == "B":
        layout = {k: [(chi + k, s) for s in _subsets(r, k)] for k in range(r + 1)}
    elif variant == "C":
        layout = {
            -r + k: [(chi + r - k, s) for s in _subsets(r, k)] for k in range(r + 1)
        }
    else:
        top = m.window[1]
        if top - r < chi:
            raise WindowTooSmall("window top leaves no room for the tail staircase")
        layout = {}
        for k in range(r + 1):
            pieces = grid_range(chi + k, top - (r - k), m.denominator)
            layout[k] = [(mu, s) for mu in pieces for s in _subsets(r, k)]

    terms = {}
    dims_of = {}
    for deg, slots in layout.items():
        for slot in slots:
            dims_of[slot] = m.dims[slot[0]]
        terms[deg] = sum(dims_of[slot] for slot in slots)

    diffs = {}
    degrees = sorted(layout)
    for deg in degrees:
        if deg + 1 not in layout:
            continue
        blocks = {}
        targets = set(layout[deg + 1])
        for (mu, subset) in layout[deg]:
            for i in range(1, r + 1):
                ins = _wedge_insert(i, subset)
                if ins is None:
                    continue
                sign, merged = ins
                if variant in ("A", "B"):
                    target = (mu + 1, merged)
                    mat = m.zmap(i, mu)
                else:
                    target = (mu - 1, merged)
                    mat = m.dmap(i, mu)
                if target not in targets:
                    continue
                blocks[(target, (mu, subset))] = (sign, mat)
        diffs[deg] = _assemble(blocks, layout[deg + 1], layout[deg], dims_of, dims_of)

    if filtered in ("F", "W"):
        names = [filtered]
    elif filtered == "both":
        names = ["F", "W"]
    elif filtered is None:
        names = []
    else:
        raise ValueError("filtered must be None, 'F', 'W' or 'both'")
    for name in names:
        table = {}
        for deg, slots in layout.items():
            total = terms[deg]
            vectors_by_level: dict = {}
            offset = 0
            pieces_flags = []
            for (mu, subset) in slots:
                if name == "F":
                    base = m.hodge_flag(mu)
                    shift = -r if variant in ("A", "B") else -(deg + r)
                    pieces_flags.append((offset, base.shift(shift)))
                else:
                    base = _weight_flag_for_piece(m, mu, weight_shift)
                    pieces_flags.append((offset, base))
                offset += m.dims[mu]
            levels = sorted({p for _, f in pieces_flags for p in f.jumps()})
            steps = []
            for p in levels:
                vectors = []
                for off, f in pieces_flags:
                    for v in f.value_at(p).basis_vectors():
                        padded = [Fraction(0)] * total
                        padded[off : off + len(v)] = v
                        vectors.append(padded)
                steps.append((p, Subspace(total, vectors)))
            table[deg] = Flag(total, "inc", steps)
        flags[name] = table

    meta = {"variant": variant, "chi": chi, "layout": layout}
    return FilteredComplex(terms, diffs, flags, meta)


def koszul_homotopy_data(m: MonodromicModule, chi, variant: str = "B"):
    """The complex, contraction maps, and expected per-degree operators.

    For the raising-map complex at chi the contraction uses the lowering
    maps and the identity reads s d + d s = (sum_i d_i z_i) - k in wedge
    degree k; for the lowering-map complex the roles swap and the sign of
    the wedge count flips.
    """
    variant = variant.upper()
    chi = rat(chi)
    r = m.rank
    comp = build_koszul(m, variant, chi)
    layout = comp.metadata["layout"]
    dims_of = {slot: m.dims[slot[0]] for slots in layout.values() for slot in slots}
    smaps = {}
    expected = {}
    degrees = sorted(layout)
    for deg in degrees:
        if deg - 1 in layout:
            blocks = {}
            for (mu, subset) in layout[deg]:
                for j in subset:
                    rem = _wedge_remove(j, subset)
                    sign, reduced = rem
                    if variant == "B":
                        target = (mu - 1, reduced)
                        mat = m.dmap(j, mu)
                    else:
                        target = (mu + 1, reduced)
                        mat = m.zmap(j, mu)
                    blocks[(target, (mu, subset))] = (sign, mat)
            smaps[deg] = _assemble(blocks, layout[deg - 1], layout[deg], dims_of, dims_of)
        # expected operator on this degree
        pieces = []
        for (mu, subset) in layout[deg]:
            k = len(subset)
            if variant == "B":
                op = m.euler_dz(mu) - Matrix.scalar(m.dims[mu], k)
            else:
                op = m.euler_zd(mu) + Matrix.scalar(m.dims[mu], k)
            pieces.append(op)
        expected[deg] = _block_diag_many(pieces, comp.terms[deg])
    return comp, smaps, expected


def _block_diag_many(blocks: list[Matrix], total: int) -> Matrix:
    grid = [[Fraction(0)] * total for _ in range(total)]
    at = 0
    for b in blocks:
        for i in range(b.rows):
            for j in range(b.cols):
                grid[at + i][at + j] = b.entries[i][j]
        at += b.rows
    return Matrix(total, total, grid)


def koszul_homotopy_check(m, chi, variant: str = "B") -> bool:
    """Exact matrix identity s d + d s = Euler composite +/- wedge count."""
    if isinstance(m, ProductModule):
        return _tensor_homotopy_check(m, chi, variant)
    comp, smaps, expected = koszul_homotopy_data(m, chi, variant)
    for deg in comp.degrees():
        total = Matrix.zero(comp.terms[deg], comp.terms[deg])
        if deg + 1 in comp.terms and deg + 1 in smaps:
            total = total + smaps[deg + 1] @ comp.differential(deg)
        if deg - 1 in comp.terms and deg in smaps:
            total = total + comp.differential(deg - 1) @ smaps[deg]
        if total != expected[deg]:
            return False
    return True


def complex_homology(c: FilteredComplex, with_flag: str | None = None) -> dict:
    """Exact homology dimensions, with induced flags when strictness holds."""
    out = {"dims": c.homology_dims()}
    if with_flag is not None:
        strict = strictness_check(c, with_flag)
        out["strict"] = strict
        flag_dims = {}
        for k in c.degrees():
            cycles = c.cycles(k)
            bounds = c.boundaries(k)
            flag = c.flag(with_flag, k)
            per_level = {}
            for p in c.flag_indices(with_flag):
                step = flag.value_at(p)
                num = cycles.intersect(step)
                per_level[p] = num.dim - num.intersect(bounds).dim
            flag_dims[k] = per_level
        out["flag_dims"] = flag_dims
        out["flag_authoritative"] = strict
    return out


def restrict(m, kind: str) -> dict:
    """Restriction to the origin: homology of the zero-value complex.

    kind 'shriek' uses the raising-map complex, 'star' the lowering-map
    one; flags on the answer are reported only when strictness holds.
    """
    if kind not in ("shriek", "star"):
        raise ValueError("kind must be 'shriek' or 'star'")
    if isinstance(m, ProductModule):
        return _restrict_product(m, kind)
    variant = "B" if kind == "shriek" else "C"
    filtered = "F" if m.hodge is not None else None
    comp = build_koszul(m, variant, 0, filtered=filtered)
    return complex_homology(comp, with_flag=filtered)


def full_window_restriction_dims(m: MonodromicModule, kind: str) -> dict[int, int]:
    """Independent restriction dimensions from the whole-window complex.

    Builds the staircase Koszul complex over every piece in the window at
    once (no graded decomposition) and reads off its homology; the
    staircase keeps only slices with complete wedge data.
    """
    if kind not in ("shriek", "star"):
        raise ValueError("kind must be 'shriek' or 'star'")
    r = m.rank
    lo, hi = m.window
    if hi - lo < r:
        raise WindowTooSmall("window shorter than the wedge range")
    layout = {}
    if kind == "shriek":
        for k in range(r + 1):
            pieces = grid_range(lo + k, hi - (r - k), m.denominator)
            layout[k] = [(mu, s) for mu in pieces for s in _subsets(r, k)]
    else:
        for k in range(r + 1):
            pieces = grid_range(lo + (r - k), hi - k, m.denominator)
            layout[-r + k] = [(mu, s) for mu in pieces for s in _subsets(r, k)]
    dims_of = {slot: m.dims[slot[0]] for slots in layout.values() for slot in slots}
    terms = {deg: sum(dims_of[s] for s in slots) for deg, slots in layout.items()}
    diffs = {}
    for deg in sorted(layout):
        if deg + 1 not in layout:
            continue
        blocks = {}
        targets = set(layout[deg + 1])
        for (mu, subset) in layout[deg]:
            for i in range(1, r + 1):
                ins = _wedge_insert(i, subset)
                if ins is None:
                    continue
                sign, merged = ins
                if kind == "shriek":
                    target = (mu + 1, merged)
                    mat = m.zmap(i, mu)
                else:
                    target = (mu - 1, merged)
                    mat = m.dmap(i, mu)
                if target in targets:
                    blocks[(target, (mu, subset))] = (sign, mat)
        diffs[deg] = _assemble(blocks, layout[deg + 1], layout[deg], dims_of, dims_of)
    return FilteredComplex(terms, diffs).homology_dims()


# ---------------------------------------------------------------------------
# product (tensor) blocks


def koszul_block_pairs(p: ProductModule, variant: str, chi) -> list[tuple]:
    """Factor value pairs whose blocks are fully materialized for chi."""
    chi = rat(chi)
    r1 = p.f1.rank
    r2 = p.f2.rank
    out = []
    for c1 in p.f1.grid:
        c2 = chi - c1
        if not p.f2.in_window(c2):
            continue
        if not (p.f1.window[0] <= c1 and c1 + r1 <= p.f1.window[1]):
            continue
        if not (p.f2.window[0] <= c2 and c2 + r2 <= p.f2.window[1]):
            continue
        has_content = any(p.f1.dims[c1 + t] for t in range(r1 + 1)) and any(
            p.f2.dims[c2 + t] for t in range(r2 + 1)
        )
        if variant.upper() == "A":
            has_content = True
        if has_content:
            out.append((c1, c2))
    return out


def build_koszul_blocks(
    p: ProductModule, variant: str, chi, filtered: str | None = None
) -> dict[tuple, FilteredComplex]:
    """One total complex per materialized factor pair."""
    chi = rat(chi)
    names = []
    if filtered in ("F", "both"):
        names.append("F")
    if filtered in ("W", "both"):
        names.append("W")
    blocks = {}
    for (c1, c2) in koszul_block_pairs(p, variant, chi):
        try:
            k1 = build_koszul(p.f1, variant, c1, filtered=filtered)
            k2 = build_koszul(p.f2, variant, c2, filtered=filtered)
        except WindowTooSmall:
            continue
        blocks[(c1, c2)] = tensor_complex(k1, k2, flag_names=names)
    return blocks


def _tensor_homotopy_check(p: ProductModule, chi, variant: str = "B") -> bool:
    chi = rat(chi)
    for (c1, c2) in koszul_block_pairs(p, variant, chi):
        try:
            comp1, s1, e1 = koszul_homotopy_data(p.f1, c1, variant)
            comp2, s2, e2 = koszul_homotopy_data(p.f2, c2, variant)
        except WindowTooSmall:
            continue
        if not _totalized_homotopy_holds(comp1, s1, e1, comp2, s2, e2):
            return False
    return True


def _totalized_homotopy_holds(c1, s1, e1, c2, s2, e2) -> bool:
    from .complexes import kronecker

    pairs_by_total: dict[int, list] = {}
    for i in c1.degrees():
        for j in c2.degrees():
            pairs_by_total.setdefault(i + j, []).append((i, j))
    for v in pairs_by_total.values():
        v.sort()
    offsets = {}
    terms = {}
    for n, pairs in sorted(pairs_by_total.items()):
        at = 0
        for (i, j) in pairs:
            offsets[(i, j)] = at
            at += c1.terms[i] * c2.terms[j]
        terms[n] = at

    def build(op_for_pair, shifts):
        mats = {}
        for n, pairs in sorted(pairs_by_total.items()):
            target_n = n + shifts
            if target_n not in terms:
                mats[n] = Matrix.zero(terms.get(target_n, 0), terms[n])
                continue
            grid = [[Fraction(0)] * terms[n] for _ in range(terms[target_n])]
            for (i, j) in pairs:
                for (block, ti, tj) in op_for_pair(i, j):
                    if block is None or (ti, tj) not in offsets:
                        continue
                    r0 = offsets[(ti, tj)]
                    c0 = offsets[(i, j)]
                    for rr in range(block.rows):
                        for cc in range(block.cols):
                            if block.entries[rr][cc]:
                                grid[r0 + rr][c0 + cc] = (
                                    grid[r0 + rr][c0 + cc] + block.entries[rr][cc]
                                )
            mats[n] = Matrix(terms[target_n], terms[n], grid)
        return mats

    def d_ops(i, j):
        out = []
        if i + 1 in c1.terms:
            out.append((kronecker(c1.differential(i), Matrix.identity(c2.terms[j])), i + 1, j))
        if j + 1 in c2.terms:
            sign = -1 if i % 2 else 1
            out.append(
                (
                    kronecker(Matrix.identity(c1.terms[i]), c2.differential(j)).scale(sign),
                    i,
                    j + 1,
                )
            )
        return out

    def s_ops(i, j):
        out = []
        if i in s1:
            out.append((kronecker(s1[i], Matrix.identity(c2.terms[j])), i - 1, j))
        if j in s2:
            sign = -1 if i % 2 else 1
            out.append(
                (kronecker(Matrix.identity(c1.terms[i]), s2[j]).scale(sign), i, j - 1)
            )
        return out

    def e_ops(i, j):
        ident1 = Matrix.identity(c1.terms[i])
        ident2 = Matrix.identity(c2.terms[j])
        return [
            (kronecker(e1[i], ident2), i, j),
            (kronecker(ident1, e2[j]), i, j),
        ]

    d = build(d_ops, +1)
    s = build(s_ops, -1)
    e = build(e_ops, 0)
    for n in sorted(pairs_by_total):
        total = Matrix.zero(terms[n], terms[n])
        if n + 1 in terms:
            total = total + s[n + 1] @ d[n]
        if n - 1 in terms:
            total = total + d[n - 1] @ s[n]
        if total != e[n]:
            return False
    return True


def _restrict_product(p: ProductModule, kind: str) -> dict:
    variant = "B" if kind == "shriek" else "C"
    blocks = build_koszul_blocks(p, variant, 0)
    dims: dict[int, int] = {}
    for comp in blocks.values():
        for deg, h in comp.homology_dims().items():
            dims[deg] = dims.get(deg, 0) + h
    return {"dims": dims, "blocks": sorted(blocks)}


# ---------------------------------------------------------------------------
# support criteria and filtration formulas


def support_criteria(m: MonodromicModule, package_window=(-3, 1)) -> dict:
    """Origin-support tests read off from the pieces next to zero."""
    from .exactla import image_basis, kernel_basis

    r = m.rank
    if not (m.window[0] <= -1 and 1 <= m.window[1]):
        raise WindowTooSmall("need margin one around zero")
    zero = Fraction(0)
    d0 = m.dims.get(zero, 0)
    stacked = Matrix.zero(0, d0)
    for i in range(1, r + 1):
        stacked = stacked.vstack(m.zmap(i, zero))
    kernel_space = kernel_basis(stacked) if d0 else Subspace.zero(0)
    injective = kernel_space.dim == 0
    summed = Matrix.zero(d0, 0)
    for i in range(1, r + 1):
        summed = summed.hstack(m.dmap(i, 1))
    image = image_basis(summed)
    cokernel_dim = d0 - image.dim
    quotient = _origin_package(cokernel_dim, r, package_window)
    splits = (
        kernel_space.intersect(image).dim == 0
        and kernel_space.sum(image).dim == d0
    )
    return {
        "no_sub_supported": injective,
        "quotient_supported": quotient,
        "splits": splits,
    }


def _origin_package(multiplicity: int, r: int, window) -> MonodromicModule:
    """A copy of the point-supported family with the given multiplicity."""
    from .graded import build_example, zero_module, MonodromicModule as MM
    from .complexes import kronecker

    if multiplicity == 0:
        return zero_module(r, window)
    base = build_example("DELTA", window, rank=r)
    if multiplicity == 1:
        return base
    dims = {chi: base.dims[chi] * multiplicity for chi in base.grid}
    ident = Matrix.identity(multiplicity)
    zmaps = {k: kronecker(v, ident) for k, v in base.zmaps.items()}
    dmaps = {k: kronecker(v, ident) for k, v in base.dmaps.items()}
    return MM(
        r, 1, base.window, dims, zmaps, dmaps,
        support_max=0, coset=0,
        metadata={"family": "DELTA", "multiplicity": multiplicity},
    )


def hodge_formula_check(m: MonodromicModule) -> dict:
    """Two filtration identities, reported per piece.

    (i) saturation: membership in F_p on a positive piece follows from
    membership of all raising-map images; (ii) span: F_p equals the span
    of lowering-map words applied to the filtration on nonnegative
    pieces, within the window.
    """
    if m.hodge is None:
        raise ValueError("module carries no hodge flags")
    r = m.rank
    saturation = {}
    span = {}
    levels = sorted(
        {p for chi in m.grid if m.dims[chi] for p in m.hodge_flag(chi).jumps()}
    )
    if levels:
        levels = [levels[0] - 1] + levels + [levels[-1] + 1]
    top = m.window[1]
    for chi in m.grid:
        if not m.dims[chi]:
            continue
        if chi > 0 and chi + 1 <= top:
            ok = True
            flag = m.hodge_flag(chi)
            for p in levels:
                target = None
                for i in range(1, r + 1):
                    pre = m.hodge_flag(chi + 1).value_at(p).preimage_under(m.zmap(i, chi))
                    target = pre if target is None else target.intersect(pre)
                if target != flag.value_at(p):
                    ok = False
            saturation[chi] = ok
        lower_ok = True
        flag = m.hodge_flag(chi)
        t_top = int(math.floor(top - chi))
        for p in levels:
            # accumulate lowering-map words from sources at integer offsets,
            # walking down one unit at a time from the window top
            current = Subspace.zero(m.dims[chi + t_top])
            for t in range(t_top, 0, -1):
                mu = chi + t
                if mu >= 0 and m.dims[mu]:
                    current = current.sum(m.hodge_flag(mu).value_at(p - t))
                image_vectors = []
                for i in range(1, r + 1):
                    mat = m.dmap(i, mu)
                    for v in current.basis_vectors():
                        image_vectors.append(mat.apply(v))
                current = Subspace(m.dims[mu - 1], image_vectors)
            span_space = current
            if chi >= 0:
                span_space = span_space.sum(flag.value_at(p))
            if span_space != flag.value_at(p):
                lower_ok = False
        span[chi] = lower_ok
    return {
        "saturation": saturation,
        "span": span,
        "ok": all(saturation.values()) and all(span.values()),
    }


def specialization_hodge(m: MonodromicModule, gamma, p: int) -> dict:
    """The graded table of the deformation-family filtration formula.

    Returns, for each integer level `ell` and in-window chi, the subspace
    of M^chi prescribed by intersecting the tail condition with the
    Euler-product-corrected sum; for gamma >= 0 the sum collapses to its
    first term.  Pieces at the bottom window edge are omitted when the
    correction products need Euler data from below the window.
    """
    if m.hodge is None:
        raise ValueError("module carries no hodge flags")
    gamma = rat(gamma)
    r = m.rank
    q_top = max(0, math.floor(-gamma))
    table = {}
    ell_lo = int(math.ceil(gamma + r - 1 - m.window[1]))
    ell_hi = int(math.floor(gamma + r - 1 - m.window[0]))
    for ell in range(ell_lo, ell_hi + 1):
        cutoff = gamma - ell + r - 1
        for chi in m.grid:
            d = m.dims[chi]
            if d == 0:
                table[(ell, chi)] = Subspace.zero(0)
                continue
            if chi < cutoff:
                table[(ell, chi)] = Subspace.zero(d)
                continue
            theta = None
            if q_top >= 1:
                if chi - 1 < m.window[0]:
                    continue
                theta = m.euler_zd(chi)
            total = Subspace.zero(d)
            for q in range(q_top + 1):
                if chi < r - 1 - q - ell:
                    continue
                step = m.hodge_flag(chi).value_at(p + 1 - q)
                op = Matrix.identity(d)
                for j in range(1, q + 1):
                    op = (theta + Matrix.scalar(d, ell + j)) @ op
                total = total.sum(step.image_under(op))
            table[(ell, chi)] = total
    return table
