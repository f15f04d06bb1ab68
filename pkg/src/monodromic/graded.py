"""Finite windows of rational-graded modules over the Weyl algebra.

A module here is a finite family of eigenvalue pieces M^chi on a grid
(1/D)*Z, together with raising maps z_i: M^chi -> M^(chi+1) and lowering
maps d_i: M^chi -> M^(chi-1) satisfying the Weyl relations, such that
sum_i z_i d_i - (chi - r) is nilpotent on M^chi.  Pieces outside the
window are unknown unless a support bound or coset constraint says they
vanish; operations that would need unknown data raise WindowTooSmall.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations_with_replacement

from .errors import BadParams, WindowTooSmall
from .exactla import Matrix, Subspace, rat, restrict_map, induced_quotient_map, solve_linear
from .filtration import Flag


def grid_range(lo, hi, denominator: int) -> list[Fraction]:
    lo, hi = rat(lo), rat(hi)
    step = Fraction(1, denominator)
    if (lo * denominator).denominator != 1 or (hi * denominator).denominator != 1:
        raise ValueError("window endpoints must lie on the grid")
    out = []
    x = lo
    while x <= hi:
        out.append(x)
        x += step
    return out


def monomials(r: int, degree: int) -> list[tuple[int, ...]]:
    """Exponent tuples alpha in N^r with |alpha| = degree, sorted."""
    if degree < 0:
        return []
    out = set()
    for combo in combinations_with_replacement(range(r), degree):
        alpha = [0] * r
        for i in combo:
            alpha[i] += 1
        out.add(tuple(alpha))
    return sorted(out)


class MonodromicModule:
    """A window of eigenvalue pieces with raising/lowering structure maps."""

    def __init__(
        self,
        rank: int,
        denominator: int,
        window,
        dims: dict,
        zmaps: dict,
        dmaps: dict,
        hodge: dict | None = None,
        weight: dict | None = None,
        support_min=None,
        support_max=None,
        coset=None,
        metadata: dict | None = None,
    ):
        self.rank = rank
        self.denominator = denominator
        self.window = (rat(window[0]), rat(window[1]))
        self.grid = grid_range(self.window[0], self.window[1], denominator)
        self.dims = {chi: int(dims.get(chi, 0)) for chi in self.grid}
        self.zmaps = {}
        self.dmaps = {}
        self.hodge = dict(hodge) if hodge is not None else None
        self.weight = dict(weight) if weight is not None else None
        self.support_min = rat(support_min) if support_min is not None else None
        self.support_max = rat(support_max) if support_max is not None else None
        self.coset = rat(coset) % 1 if coset is not None else None
        self.metadata = dict(metadata or {})
        step = Fraction(1, denominator)
        for chi in self.grid:
            for i in range(1, rank + 1):
                if chi + 1 <= self.window[1]:
                    m = zmaps.get((i, chi), Matrix.zero(self.dims.get(chi + 1, 0), self.dims[chi]))
                    if m.cols != self.dims[chi] or m.rows != self.dims.get(chi + 1, 0):
                        raise ValueError(f"z-map {i} at {chi} has wrong shape")
                    self.zmaps[(i, chi)] = m
                if chi - 1 >= self.window[0]:
                    m = dmaps.get((i, chi), Matrix.zero(self.dims.get(chi - 1, 0), self.dims[chi]))
                    if m.cols != self.dims[chi] or m.rows != self.dims.get(chi - 1, 0):
                        raise ValueError(f"d-map {i} at {chi} has wrong shape")
                    self.dmaps[(i, chi)] = m
        if self.hodge is not None:
            for chi, flag in self.hodge.items():
                if flag.ambient_dim != self.dims.get(chi, 0):
                    raise ValueError(f"hodge flag at {chi} has wrong ambient dimension")
        if self.weight is not None:
            for chi, flag in self.weight.items():
                if flag.ambient_dim != self.dims.get(chi, 0):
                    raise ValueError(f"weight flag at {chi} has wrong ambient dimension")
        del step

    # -- piece access -------------------------------------------------

    def in_window(self, chi) -> bool:
        chi = rat(chi)
        return self.window[0] <= chi <= self.window[1] and (
            (chi - self.window[0]) * self.denominator
        ).denominator == 1

    def known_dim(self, chi):
        """Dimension of M^chi, or None when the window does not cover it."""
        chi = rat(chi)
        if self.in_window(chi):
            return self.dims[chi]
        if self.support_min is not None and chi < self.support_min:
            return 0
        if self.support_max is not None and chi > self.support_max:
            return 0
        if self.coset is not None and (chi - self.coset).denominator != 1:
            return 0
        return None

    def piece_dim(self, chi) -> int:
        d = self.known_dim(chi)
        if d is None:
            raise WindowTooSmall(f"piece at {chi} is outside the window")
        return d

    def zmap(self, i: int, chi) -> Matrix:
        chi = rat(chi)
        key = (i, chi)
        if key in self.zmaps:
            return self.zmaps[key]
        src = self.known_dim(chi)
        tgt = self.known_dim(chi + 1)
        if src == 0 or tgt == 0:
            return Matrix.zero(tgt or 0, src or 0)
        raise WindowTooSmall(f"z-map {i} at {chi} is outside the window")

    def dmap(self, i: int, chi) -> Matrix:
        chi = rat(chi)
        key = (i, chi)
        if key in self.dmaps:
            return self.dmaps[key]
        src = self.known_dim(chi)
        tgt = self.known_dim(chi - 1)
        if src == 0 or tgt == 0:
            return Matrix.zero(tgt or 0, src or 0)
        raise WindowTooSmall(f"d-map {i} at {chi} is outside the window")

    def has_zmap(self, i: int, chi) -> bool:
        chi = rat(chi)
        if (i, chi) in self.zmaps:
            return True
        return self.known_dim(chi) == 0 or self.known_dim(chi + 1) == 0

    def has_dmap(self, i: int, chi) -> bool:
        chi = rat(chi)
        if (i, chi) in self.dmaps:
            return True
        return self.known_dim(chi) == 0 or self.known_dim(chi - 1) == 0

    def euler_zd(self, chi) -> Matrix:
        """sum_i z_i d_i on M^chi; generalized eigenvalue chi - rank."""
        chi = rat(chi)
        total = Matrix.zero(self.piece_dim(chi), self.piece_dim(chi))
        for i in range(1, self.rank + 1):
            total = total + self.zmap(i, chi - 1) @ self.dmap(i, chi)
        return total

    def euler_dz(self, chi) -> Matrix:
        """sum_i d_i z_i on M^chi; generalized eigenvalue chi."""
        chi = rat(chi)
        total = Matrix.zero(self.piece_dim(chi), self.piece_dim(chi))
        for i in range(1, self.rank + 1):
            total = total + self.dmap(i, chi + 1) @ self.zmap(i, chi)
        return total

    def hodge_flag(self, chi) -> Flag:
        if self.hodge is None:
            raise ValueError("module carries no hodge flags")
        chi = rat(chi)
        if chi in self.hodge:
            return self.hodge[chi]
        if self.piece_dim(chi) == 0:
            return Flag(0, "inc", [])
        raise WindowTooSmall(f"hodge flag at {chi} is outside the window")

    def weight_flag(self, chi) -> Flag:
        if self.weight is None:
            raise ValueError("module carries no weight flags")
        chi = rat(chi)
        if chi in self.weight:
            return self.weight[chi]
        if self.piece_dim(chi) == 0:
            return Flag(0, "inc", [])
        raise WindowTooSmall(f"weight flag at {chi} is outside the window")

    def total_dim(self) -> int:
        return sum(self.dims.values())

    def equals(self, other: "MonodromicModule") -> bool:
        """Exact data equality: window, dimensions, maps, and flags."""
        if (
            self.rank != other.rank
            or self.denominator != other.denominator
            or self.window != other.window
            or self.dims != other.dims
            or self.zmaps != other.zmaps
            or self.dmaps != other.dmaps
        ):
            return False
        for mine, theirs in ((self.hodge, other.hodge), (self.weight, other.weight)):
            if (mine is None) != (theirs is None):
                return False
            if mine is not None:
                keys = {chi for chi in set(mine) | set(theirs) if self.dims.get(chi, 0)}
                for chi in keys:
                    if mine.get(chi) != theirs.get(chi):
                        return False
        return True


@dataclass
class ValidationIssue:
    kind: str
    chi: Fraction | None = None
    i: int | None = None
    j: int | None = None
    detail: str = ""

    def __str__(self):
        where = []
        if self.chi is not None:
            where.append(f"chi={self.chi}")
        if self.i is not None:
            where.append(f"i={self.i}")
        if self.j is not None:
            where.append(f"j={self.j}")
        loc = f" [{', '.join(where)}]" if where else ""
        return f"{self.kind}{loc}: {self.detail}" if self.detail else f"{self.kind}{loc}"


def validate_module(m: MonodromicModule) -> list[ValidationIssue]:
    """Check all structural invariants; one issue per violation."""
    issues: list[ValidationIssue] = []
    r = m.rank
    for chi in m.grid:
        # pairwise commutation where every composite stays in the window
        for i in range(1, r + 1):
            for j in range(1, r + 1):
                if i < j and m.has_zmap(i, chi) and m.has_zmap(j, chi) and \
                        m.has_zmap(j, chi + 1) and m.has_zmap(i, chi + 1):
                    lhs = m.zmap(j, chi + 1) @ m.zmap(i, chi)
                    rhs = m.zmap(i, chi + 1) @ m.zmap(j, chi)
                    if lhs != rhs:
                        issues.append(ValidationIssue("z-commutation", chi, i, j))
                if i < j and m.has_dmap(i, chi) and m.has_dmap(j, chi) and \
                        m.has_dmap(j, chi - 1) and m.has_dmap(i, chi - 1):
                    lhs = m.dmap(j, chi - 1) @ m.dmap(i, chi)
                    rhs = m.dmap(i, chi - 1) @ m.dmap(j, chi)
                    if lhs != rhs:
                        issues.append(ValidationIssue("d-commutation", chi, i, j))
                if i != j and m.has_dmap(i, chi) and m.has_zmap(j, chi - 1) and \
                        m.has_zmap(j, chi) and m.has_dmap(i, chi + 1):
                    lhs = m.zmap(j, chi - 1) @ m.dmap(i, chi)
                    rhs = m.dmap(i, chi + 1) @ m.zmap(j, chi)
                    if lhs != rhs:
                        issues.append(ValidationIssue("mixed-commutation", chi, i, j))
        # canonical relation [d_i, z_i] = 1 where both composites exist
        for i in range(1, r + 1):
            if m.has_zmap(i, chi) and m.has_dmap(i, chi + 1) and \
                    m.has_dmap(i, chi) and m.has_zmap(i, chi - 1):
                bracket = m.dmap(i, chi + 1) @ m.zmap(i, chi) - m.zmap(i, chi - 1) @ m.dmap(i, chi)
                if bracket != Matrix.identity(m.dims[chi]):
                    issues.append(ValidationIssue("canonical-relation", chi, i))
        # nilpotency of the shifted Euler operator
        if chi - 1 >= m.window[0] and m.dims[chi]:
            theta = m.euler_zd(chi)
            shifted = theta - Matrix.scalar(m.dims[chi], chi - r)
            if not shifted.is_nilpotent():
                issues.append(ValidationIssue("euler-nilpotency", chi))
    if m.hodge is not None:
        for chi in m.grid:
            if not m.dims[chi]:
                continue
            flag = m.hodge_flag(chi)
            for i in range(1, r + 1):
                if m.has_zmap(i, chi) and chi + 1 <= m.window[1]:
                    tgt = m.hodge_flag(chi + 1)
                    for p in flag.jumps():
                        img = flag.value_at(p).image_under(m.zmap(i, chi))
                        if not tgt.value_at(p).contains_subspace(img):
                            issues.append(ValidationIssue("hodge-z-compat", chi, i))
                            break
                if m.has_dmap(i, chi) and chi - 1 >= m.window[0]:
                    tgt = m.hodge_flag(chi - 1)
                    for p in flag.jumps():
                        img = flag.value_at(p).image_under(m.dmap(i, chi))
                        if not tgt.value_at(rat(p) + 1).contains_subspace(img):
                            issues.append(ValidationIssue("hodge-d-compat", chi, i))
                            break
    if m.weight is not None:
        for chi in m.grid:
            if not m.dims[chi]:
                continue
            flag = m.weight_flag(chi)
            for i in range(1, r + 1):
                if m.has_zmap(i, chi) and chi + 1 <= m.window[1]:
                    tgt = m.weight_flag(chi + 1)
                    for k in flag.jumps():
                        img = flag.value_at(k).image_under(m.zmap(i, chi))
                        if not tgt.value_at(k).contains_subspace(img):
                            issues.append(ValidationIssue("weight-z-compat", chi, i))
                            break
                if m.has_dmap(i, chi) and chi - 1 >= m.window[0]:
                    tgt = m.weight_flag(chi - 1)
                    for k in flag.jumps():
                        img = flag.value_at(k).image_under(m.dmap(i, chi))
                        if not tgt.value_at(k).contains_subspace(img):
                            issues.append(ValidationIssue("weight-d-compat", chi, i))
                            break
    return issues


# ---------------------------------------------------------------------------
# example corpus


def build_example(name: str, window, *, rank: int = 1, lam=None, size=None) -> MonodromicModule:
    """Construct a member of the example corpus.

    STRUCTURE(rank): polynomial functions, monomial basis, pieces at
    integer chi >= rank.  DELTA(rank): derivatives of the point mass at
    the origin, pieces at integer chi <= 0.  KUMMER(lam): rank one, all
    pieces one-dimensional on the coset lam + Z, every map invertible.
    JORDAN(size): rank one, each integer piece of dimension `size` with a
    single nilpotent Jordan block in its Euler operator.
    """
    name = name.upper()
    if name == "STRUCTURE":
        return _structure(rank, window)
    if name == "DELTA":
        return _delta(rank, window)
    if name == "KUMMER":
        if lam is None:
            raise BadParams("KUMMER needs a rational parameter")
        return _kummer(rat(lam), window)
    if name == "JORDAN":
        if size is None or size < 1:
            raise BadParams("JORDAN needs a positive block size")
        return _jordan(int(size), window)
    raise BadParams(f"unknown example family {name!r}")


def _structure(r: int, window) -> MonodromicModule:
    lo, hi = rat(window[0]), rat(window[1])
    dims = {}
    basis = {}
    for chi in grid_range(lo, hi, 1):
        degree = int(chi) - r
        basis[chi] = monomials(r, degree) if degree >= 0 else []
        dims[chi] = len(basis[chi])
    zmaps = {}
    dmaps = {}
    for chi in grid_range(lo, hi, 1):
        for i in range(1, r + 1):
            if chi + 1 <= hi:
                grid = [[0] * dims[chi] for _ in range(dims[chi + 1])]
                for col, alpha in enumerate(basis[chi]):
                    target = list(alpha)
                    target[i - 1] += 1
                    grid[basis[chi + 1].index(tuple(target))][col] = 1
                zmaps[(i, chi)] = Matrix(dims[chi + 1], dims[chi], grid)
            if chi - 1 >= lo:
                grid = [[0] * dims[chi] for _ in range(dims[chi - 1])]
                for col, alpha in enumerate(basis[chi]):
                    if alpha[i - 1] > 0:
                        target = list(alpha)
                        target[i - 1] -= 1
                        grid[basis[chi - 1].index(tuple(target))][col] = alpha[i - 1]
                dmaps[(i, chi)] = Matrix(dims[chi - 1], dims[chi], grid)
    hodge = {chi: Flag.single_jump(dims[chi], "inc", 0) for chi in dims if dims[chi]}
    weight = {chi: Flag.single_jump(dims[chi], "inc", r) for chi in dims if dims[chi]}
    return MonodromicModule(
        r, 1, (lo, hi), dims, zmaps, dmaps, hodge, weight,
        support_min=r, coset=0, metadata={"family": "STRUCTURE", "rank": r},
    )


def _delta(r: int, window) -> MonodromicModule:
    lo, hi = rat(window[0]), rat(window[1])
    dims = {}
    basis = {}
    for chi in grid_range(lo, hi, 1):
        degree = -int(chi)
        basis[chi] = monomials(r, degree) if degree >= 0 and chi <= 0 else []
        dims[chi] = len(basis[chi])
    zmaps = {}
    dmaps = {}
    for chi in grid_range(lo, hi, 1):
        for i in range(1, r + 1):
            if chi + 1 <= hi:
                grid = [[0] * dims[chi] for _ in range(dims[chi + 1])]
                for col, alpha in enumerate(basis[chi]):
                    if alpha[i - 1] > 0:
                        target = list(alpha)
                        target[i - 1] -= 1
                        grid[basis[chi + 1].index(tuple(target))][col] = -alpha[i - 1]
                zmaps[(i, chi)] = Matrix(dims[chi + 1], dims[chi], grid)
            if chi - 1 >= lo:
                grid = [[0] * dims[chi] for _ in range(dims[chi - 1])]
                for col, alpha in enumerate(basis[chi]):
                    target = list(alpha)
                    target[i - 1] += 1
                    grid[basis[chi - 1].index(tuple(target))][col] = 1
                dmaps[(i, chi)] = Matrix(dims[chi - 1], dims[chi], grid)
    hodge = {
        chi: Flag.single_jump(dims[chi], "inc", -chi + r) for chi in dims if dims[chi]
    }
    weight = {chi: Flag.single_jump(dims[chi], "inc", 0) for chi in dims if dims[chi]}
    return MonodromicModule(
        r, 1, (lo, hi), dims, zmaps, dmaps, hodge, weight,
        support_max=0, coset=0, metadata={"family": "DELTA", "rank": r},
    )


def _kummer(lam: Fraction, window) -> MonodromicModule:
    if lam.denominator == 1:
        raise BadParams("KUMMER parameter must be non-integral")
    denom = lam.denominator
    lo, hi = rat(window[0]), rat(window[1])
    dims = {}
    for chi in grid_range(lo, hi, denom):
        dims[chi] = 1 if (chi - lam).denominator == 1 else 0
    zmaps = {}
    dmaps = {}
    for chi in grid_range(lo, hi, denom):
        if dims[chi]:
            if chi + 1 <= hi:
                zmaps[(1, chi)] = Matrix(1, 1, [[1]])
            if chi - 1 >= lo:
                dmaps[(1, chi)] = Matrix(1, 1, [[chi - 1]])
    hodge = {chi: Flag.single_jump(1, "inc", 0) for chi in dims if dims[chi]}
    weight = {chi: Flag.single_jump(1, "inc", 1) for chi in dims if dims[chi]}
    return MonodromicModule(
        1, denom, (lo, hi), dims, zmaps, dmaps, hodge, weight,
        coset=lam, metadata={"family": "KUMMER", "lam": lam},
    )


def _jordan(size: int, window) -> MonodromicModule:
    lo, hi = rat(window[0]), rat(window[1])
    from .filtration import monodromy_filtration

    jordan = Matrix(
        size, size, [[1 if j == i + 1 else 0 for j in range(size)] for i in range(size)]
    )
    dims = {chi: size for chi in grid_range(lo, hi, 1)}
    zmaps = {}
    dmaps = {}
    for chi in grid_range(lo, hi, 1):
        if chi + 1 <= hi:
            zmaps[(1, chi)] = Matrix.identity(size)
        if chi - 1 >= lo:
            dmaps[(1, chi)] = Matrix.scalar(size, chi - 1) + jordan
    hodge = {chi: Flag.single_jump(size, "inc", 0) for chi in dims}
    wflag = monodromy_filtration(jordan, 0)
    weight = {chi: wflag for chi in dims}
    return MonodromicModule(
        1, 1, (lo, hi), dims, zmaps, dmaps, hodge, weight,
        coset=0, metadata={"family": "JORDAN", "size": size},
    )


def zero_module(rank: int = 1, window=(0, 1), denominator: int = 1) -> MonodromicModule:
    return MonodromicModule(rank, denominator, window, {}, {}, {},
                            support_min=0, support_max=0)


# ---------------------------------------------------------------------------
# operations


def zero_section_vfiltration(m: MonodromicModule, lam) -> dict:
    """V^lam as a family of subspaces: the full piece for chi >= lam."""
    lam = rat(lam)
    out = {}
    for chi in m.grid:
        d = m.dims[chi]
        out[chi] = Subspace.full(d) if chi >= lam else Subspace.zero(d)
    return out


def apply_antipodal(m: MonodromicModule) -> MonodromicModule:
    """Negate every raising and lowering map; an involution."""
    return MonodromicModule(
        m.rank,
        m.denominator,
        m.window,
        m.dims,
        {k: mat.scale(-1) for k, mat in m.zmaps.items()},
        {k: mat.scale(-1) for k, mat in m.dmaps.items()},
        m.hodge,
        m.weight,
        m.support_min,
        m.support_max,
        m.coset,
        m.metadata,
    )


def tate_twist(m: MonodromicModule, k: int) -> MonodromicModule:
    """Shift the hodge flags by k and the weight flags by 2k."""
    if m.hodge is None:
        raise ValueError("tate twist needs hodge flags")
    hodge = {chi: flag.shift(k) for chi, flag in m.hodge.items()}
    weight = None
    if m.weight is not None:
        weight = {chi: flag.shift(-2 * k) for chi, flag in m.weight.items()}
    return MonodromicModule(
        m.rank, m.denominator, m.window, m.dims, m.zmaps, m.dmaps,
        hodge, weight, m.support_min, m.support_max, m.coset, m.metadata,
    )


def direct_sum(a: MonodromicModule, b: MonodromicModule) -> MonodromicModule:
    """Blockwise direct sum on the common window."""
    if a.rank != b.rank or a.denominator != b.denominator:
        raise ValueError("summands must share rank and grid")
    lo = max(a.window[0], b.window[0])
    hi = min(a.window[1], b.window[1])
    if lo > hi:
        raise WindowTooSmall("windows do not overlap")
    dims = {}
    zmaps = {}
    dmaps = {}
    for chi in grid_range(lo, hi, a.denominator):
        dims[chi] = a.dims[chi] + b.dims[chi]
        for i in range(1, a.rank + 1):
            if chi + 1 <= hi:
                zmaps[(i, chi)] = _block_diag(a.zmap(i, chi), b.zmap(i, chi))
            if chi - 1 >= lo:
                dmaps[(i, chi)] = _block_diag(a.dmap(i, chi), b.dmap(i, chi))
    hodge = None
    if a.hodge is not None and b.hodge is not None:
        hodge = {
            chi: _sum_flags(a.hodge_flag(chi), b.hodge_flag(chi))
            for chi in grid_range(lo, hi, a.denominator) if dims[chi]
        }
    weight = None
    if a.weight is not None and b.weight is not None:
        weight = {
            chi: _sum_flags(a.weight_flag(chi), b.weight_flag(chi))
            for chi in grid_range(lo, hi, a.denominator) if dims[chi]
        }
    support_min = None
    if a.support_min is not None and b.support_min is not None:
        support_min = min(a.support_min, b.support_min)
    support_max = None
    if a.support_max is not None and b.support_max is not None:
        support_max = max(a.support_max, b.support_max)
    coset = a.coset if a.coset is not None and a.coset == b.coset else None
    return MonodromicModule(
        a.rank, a.denominator, (lo, hi), dims, zmaps, dmaps, hodge, weight,
        support_min, support_max, coset,
        {"family": "SUM", "parts": (a.metadata, b.metadata)},
    )


def _block_diag(a: Matrix, b: Matrix) -> Matrix:
    rows = a.rows + b.rows
    cols = a.cols + b.cols
    grid = [[0] * cols for _ in range(rows)]
    for i in range(a.rows):
        for j in range(a.cols):
            grid[i][j] = a.entries[i][j]
    for i in range(b.rows):
        for j in range(b.cols):
            grid[a.rows + i][a.cols + j] = b.entries[i][j]
    return Matrix(rows, cols, grid)


def _sum_flags(fa: Flag, fb: Flag) -> Flag:
    dim = fa.ambient_dim + fb.ambient_dim
    indices = sorted(set(fa.jumps()) | set(fb.jumps()))
    steps = []
    for p in indices:
        vectors = []
        for v in fa.value_at(p).basis_vectors():
            vectors.append(list(v) + [0] * fb.ambient_dim)
        for v in fb.value_at(p).basis_vectors():
            vectors.append([0] * fa.ambient_dim + list(v))
        steps.append((p, Subspace(dim, vectors)))
    return Flag(dim, "inc", steps)


class ModuleMorphism:
    """A grading-preserving map, one block per piece on the window overlap."""

    def __init__(self, source: MonodromicModule, target: MonodromicModule, blocks: dict):
        if source.rank != target.rank or source.denominator != target.denominator:
            raise ValueError("source and target must share rank and grid")
        self.source = source
        self.target = target
        lo = max(source.window[0], target.window[0])
        hi = min(source.window[1], target.window[1])
        if lo > hi:
            raise WindowTooSmall("windows do not overlap")
        self.window = (lo, hi)
        self.blocks = {}
        for chi in grid_range(lo, hi, source.denominator):
            blk = blocks.get(chi, Matrix.zero(target.dims[chi], source.dims[chi]))
            if blk.cols != source.dims[chi] or blk.rows != target.dims[chi]:
                raise ValueError(f"morphism block at {chi} has wrong shape")
            self.blocks[chi] = blk

    def grid(self):
        return grid_range(self.window[0], self.window[1], self.source.denominator)

    def violations(self) -> list[str]:
        out = []
        lo, hi = self.window
        for chi in self.grid():
            for i in range(1, self.source.rank + 1):
                if chi + 1 <= hi:
                    lhs = self.target.zmap(i, chi) @ self.blocks[chi]
                    rhs = self.blocks[chi + 1] @ self.source.zmap(i, chi)
                    if lhs != rhs:
                        out.append(f"does not commute with z_{i} at {chi}")
                if chi - 1 >= lo:
                    lhs = self.target.dmap(i, chi) @ self.blocks[chi]
                    rhs = self.blocks[chi - 1] @ self.source.dmap(i, chi)
                    if lhs != rhs:
                        out.append(f"does not commute with d_{i} at {chi}")
        return out


def morphism_kernel_cokernel(phi: ModuleMorphism):
    """Piecewise kernel and cokernel with their induced structure maps."""
    bad = phi.violations()
    if bad:
        raise ValueError("not a morphism: " + "; ".join(bad))
    from .exactla import kernel_basis

    lo, hi = phi.window
    denom = phi.source.denominator
    kernels = {chi: kernel_basis(phi.blocks[chi]) for chi in phi.grid()}
    ker_dims = {chi: kernels[chi].dim for chi in phi.grid()}
    ker_z = {}
    ker_d = {}
    images = {chi: phi.source.dims and None for chi in phi.grid()}
    cok_dims = {}
    cok_proj = {}
    for chi in phi.grid():
        img = Subspace(
            phi.target.dims[chi],
            [phi.blocks[chi].apply(v) for v in Subspace.full(phi.source.dims[chi]).basis_vectors()],
        )
        images[chi] = img
        cok_proj[chi] = img.quotient_map()
        cok_dims[chi] = cok_proj[chi].rows
    cok_z = {}
    cok_d = {}
    for chi in phi.grid():
        for i in range(1, phi.source.rank + 1):
            if chi + 1 <= hi:
                ker_z[(i, chi)] = restrict_map(
                    phi.source.zmap(i, chi), kernels[chi], kernels[chi + 1]
                )
                cok_z[(i, chi)] = induced_quotient_map(
                    phi.target.zmap(i, chi), images[chi], images[chi + 1]
                )
            if chi - 1 >= lo:
                ker_d[(i, chi)] = restrict_map(
                    phi.source.dmap(i, chi), kernels[chi], kernels[chi - 1]
                )
                cok_d[(i, chi)] = induced_quotient_map(
                    phi.target.dmap(i, chi), images[chi], images[chi - 1]
                )
    kernel = MonodromicModule(
        phi.source.rank, denom, (lo, hi), ker_dims, ker_z, ker_d,
        support_min=phi.source.support_min, support_max=phi.source.support_max,
        coset=phi.source.coset, metadata={"derived": "kernel"},
    )
    cokernel = MonodromicModule(
        phi.source.rank, denom, (lo, hi), cok_dims, cok_z, cok_d,
        support_min=phi.target.support_min, support_max=phi.target.support_max,
        coset=phi.target.coset, metadata={"derived": "cokernel"},
    )
    return kernel, cokernel


def hodge_decomposition_check(piece_dims: list[int], flag: Flag) -> bool:
    """Does a flag on the direct sum split across the given blocks?

    The ambient space is the concatenation of blocks of the stated
    dimensions; the check is dim F_p = sum over blocks of dim(F_p meet
    block) for every level p.
    """
    total = sum(piece_dims)
    if flag.ambient_dim != total:
        raise ValueError("flag lives on the wrong total space")
    offsets = []
    at = 0
    for d in piece_dims:
        offsets.append((at, d))
        at += d
    for p in flag.jumps():
        step = flag.value_at(p)
        split_dim = 0
        for start, d in offsets:
            vectors = []
            for idx in range(d):
                v = [0] * total
                v[start + idx] = 1
                vectors.append(v)
            block = Subspace(total, vectors)
            split_dim += step.intersect(block).dim
        if split_dim != step.dim:
            return False
    return True


def is_pure_eigen(m: MonodromicModule) -> bool:
    """True iff the shifted Euler operator vanishes exactly on each piece."""
    for chi in m.grid:
        if chi - 1 < m.window[0] or not m.dims[chi]:
            continue
        theta = m.euler_zd(chi)
        if theta != Matrix.scalar(m.dims[chi], chi - m.rank):
            return False
    return True


def weight_lowering_property(m: MonodromicModule) -> bool:
    """The nilpotent part of the Euler operator drops weights by two."""
    if m.weight is None:
        raise ValueError("module carries no weight flags")
    for chi in m.grid:
        if chi - 1 < m.window[0] or not m.dims[chi]:
            continue
        n = m.euler_zd(chi) - Matrix.scalar(m.dims[chi], chi - m.rank)
        flag = m.weight_flag(chi)
        for k in flag.jumps():
            img = flag.value_at(k).image_under(n)
            if not flag.value_at(rat(k) - 2).contains_subspace(img):
                return False
    return True


# ---------------------------------------------------------------------------
# external tensor products


class ProductModule:
    """External tensor of two windows, kept in factored (block) form.

    The pieces of the honest tensor can be infinite dimensional, so the
    product is stored as its factors plus the pair bookkeeping; blockwise
    operations enumerate the materialized pairs and consumers state which
    pairs their claims cover.
    """

    def __init__(self, f1: MonodromicModule, f2: MonodromicModule):
        self.f1 = f1
        self.f2 = f2
        self.rank = f1.rank + f2.rank
        self.denominator = _lcm(f1.denominator, f2.denominator)
        self.metadata = {"family": "TENSOR", "parts": (f1.metadata, f2.metadata)}

    def pairs_for(self, chi) -> list[tuple[Fraction, Fraction]]:
        """Materialized factor pairs (chi1, chi2) with chi1 + chi2 = chi."""
        chi = rat(chi)
        out = []
        for chi1 in self.f1.grid:
            chi2 = chi - chi1
            if self.f2.in_window(chi2) and self.f1.dims[chi1] and self.f2.dims[chi2]:
                out.append((chi1, chi2))
        return out

    def piece_complete(self, chi) -> bool:
        """Is every potentially nonzero pair for chi materialized?"""
        chi = rat(chi)
        for chi1 in _support_candidates(self.f1, self.f2, chi):
            chi2 = chi - chi1
            d1 = self.f1.known_dim(chi1)
            d2 = self.f2.known_dim(chi2)
            if d1 is None or d2 is None:
                return False
        return True

    def piece_dim(self, chi) -> int:
        return sum(self.f1.dims[a] * self.f2.dims[b] for a, b in self.pairs_for(chi))

    def complete_range(self) -> list[Fraction]:
        lo = self.f1.window[0] + self.f2.window[0]
        hi = self.f1.window[1] + self.f2.window[1]
        return [chi for chi in grid_range(lo, hi, self.denominator) if self.piece_complete(chi)]

    def to_module(self, window=None) -> MonodromicModule:
        """Materialize as a plain module; needs complete pieces throughout."""
        complete = self.complete_range()
        if window is None:
            if not complete:
                raise WindowTooSmall("no complete pieces; keep the factored form")
            lo, hi = complete[0], complete[-1]
        else:
            lo, hi = rat(window[0]), rat(window[1])
        grid = grid_range(lo, hi, self.denominator)
        for chi in grid:
            if not self.piece_complete(chi):
                raise WindowTooSmall(f"tensor piece at {chi} needs data outside the windows")
        layout = {chi: self.pairs_for(chi) for chi in grid}
        offsets = {}
        dims = {}
        for chi in grid:
            at = 0
            for pair in layout[chi]:
                offsets[(chi, pair)] = at
                at += self.f1.dims[pair[0]] * self.f2.dims[pair[1]]
            dims[chi] = at
        zmaps = {}
        dmaps = {}
        from .complexes import kronecker

        for chi in grid:
            for i in range(1, self.rank + 1):
                first = i <= self.f1.rank
                for direction, shift in (("z", 1), ("d", -1)):
                    target = chi + shift
                    if not (lo <= target <= hi):
                        continue
                    grid_m = [[Fraction(0)] * dims[chi] for _ in range(dims[target])]
                    for (a, b) in layout[chi]:
                        ta, tb = (a + shift, b) if first else (a, b + shift)
                        if ((ta, tb)) not in set(layout[target]):
                            if (self.f1.known_dim(ta) or 0) and (self.f2.known_dim(tb) or 0):
                                raise WindowTooSmall("map leaves the materialized pairs")
                            continue
                        if first:
                            fm = (
                                self.f1.zmap(i, a) if direction == "z" else self.f1.dmap(i, a)
                            )
                            block = kronecker(fm, Matrix.identity(self.f2.dims[b]))
                        else:
                            idx = i - self.f1.rank
                            fm = (
                                self.f2.zmap(idx, b) if direction == "z" else self.f2.dmap(idx, b)
                            )
                            block = kronecker(Matrix.identity(self.f1.dims[a]), fm)
                        r0 = offsets[(target, (ta, tb))]
                        c0 = offsets[(chi, (a, b))]
                        for rr in range(block.rows):
                            for cc in range(block.cols):
                                grid_m[r0 + rr][c0 + cc] = block.entries[rr][cc]
                    mat = Matrix(dims[target], dims[chi], grid_m)
                    if direction == "z":
                        zmaps[(i, chi)] = mat
                    else:
                        dmaps[(i, chi)] = mat
        hodge = None
        if self.f1.hodge is not None and self.f2.hodge is not None:
            hodge = {}
            for chi in grid:
                if not dims[chi]:
                    continue
                indices = sorted(
                    {
                        p1 + p2
                        for (a, b) in layout[chi]
                        for p1 in self.f1.hodge_flag(a).jumps()
                        for p2 in self.f2.hodge_flag(b).jumps()
                    }
                )
                steps = []
                for p in indices:
                    vectors = []
                    for (a, b) in layout[chi]:
                        fa = self.f1.hodge_flag(a)
                        fb = self.f2.hodge_flag(b)
                        from .complexes import tensor_subspace

                        block = Subspace.zero(self.f1.dims[a] * self.f2.dims[b])
                        for p1 in fa.jumps():
                            block = block.sum(
                                tensor_subspace(fa.value_at(p1), fb.value_at(rat(p) - rat(p1)))
                            )
                        off = offsets[(chi, (a, b))]
                        for v in block.basis_vectors():
                            padded = [Fraction(0)] * dims[chi]
                            padded[off : off + len(v)] = v
                            vectors.append(padded)
                    steps.append((p, Subspace(dims[chi], vectors)))
                hodge[chi] = Flag(dims[chi], "inc", steps)
        weight = None
        if self.f1.weight is not None and self.f2.weight is not None:
            weight = {}
            for chi in grid:
                if not dims[chi]:
                    continue
                indices = sorted(
                    {
                        k1 + k2
                        for (a, b) in layout[chi]
                        for k1 in self.f1.weight_flag(a).jumps()
                        for k2 in self.f2.weight_flag(b).jumps()
                    }
                )
                steps = []
                for k in indices:
                    vectors = []
                    for (a, b) in layout[chi]:
                        fa = self.f1.weight_flag(a)
                        fb = self.f2.weight_flag(b)
                        from .complexes import tensor_subspace

                        block = Subspace.zero(self.f1.dims[a] * self.f2.dims[b])
                        for k1 in fa.jumps():
                            block = block.sum(
                                tensor_subspace(fa.value_at(k1), fb.value_at(rat(k) - rat(k1)))
                            )
                        off = offsets[(chi, (a, b))]
                        for v in block.basis_vectors():
                            padded = [Fraction(0)] * dims[chi]
                            padded[off : off + len(v)] = v
                            vectors.append(padded)
                    steps.append((k, Subspace(dims[chi], vectors)))
                weight[chi] = Flag(dims[chi], "inc", steps)
        support_min = (
            self.f1.support_min + self.f2.support_min
            if self.f1.support_min is not None and self.f2.support_min is not None
            else None
        )
        support_max = (
            self.f1.support_max + self.f2.support_max
            if self.f1.support_max is not None and self.f2.support_max is not None
            else None
        )
        coset = (
            (self.f1.coset + self.f2.coset) % 1
            if self.f1.coset is not None and self.f2.coset is not None
            else None
        )
        return MonodromicModule(
            self.rank, self.denominator, (lo, hi), dims, zmaps, dmaps,
            hodge, weight, support_min, support_max, coset, self.metadata,
        )


def _support_candidates(f1: MonodromicModule, f2: MonodromicModule, chi):
    """First-factor eigenvalues that could pair to total chi, using all
    known support constraints; unbounded directions yield a probe point
    outside the window so completeness fails."""
    denom = _lcm(f1.denominator, f2.denominator)
    lo1 = f1.support_min if f1.support_min is not None else None
    hi1 = f1.support_max if f1.support_max is not None else None
    lo2 = f2.support_min if f2.support_min is not None else None
    hi2 = f2.support_max if f2.support_max is not None else None
    chi = rat(chi)
    lower = lo1 if lo1 is not None else (chi - hi2 if hi2 is not None else None)
    upper = hi1 if hi1 is not None else (chi - lo2 if lo2 is not None else None)
    if lower is None:
        lower = f1.window[0] - 1
    if upper is None:
        upper = f1.window[1] + 1
    shift = Fraction(0)
    if ((upper - lower) * denom).denominator != 1:
        upper = lower + Fraction(math.floor((upper - lower) * denom), denom)
    out = []
    x = lower
    while x <= upper:
        if f1.coset is None or (x - f1.coset).denominator == 1:
            if f2.coset is None or (chi - x - f2.coset).denominator == 1:
                out.append(x)
        x += Fraction(1, denom)
    del shift
    return out


def external_tensor(m1: MonodromicModule, m2: MonodromicModule) -> ProductModule:
    """External tensor, kept factored; see ProductModule.to_module."""
    return ProductModule(m1, m2)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)
