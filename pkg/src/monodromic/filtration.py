"""Flags, monodromy-type filtrations, splitting operators, strictness.

Increasing and decreasing nested families of subspaces ("flags"), the
weight filtration of a nilpotent endomorphism, its relative version over a
pre-existing filtration, the canonical splitting operator of a compatible
grading pair, and strictness / spectral-sequence computations for filtered
complexes.
"""

from __future__ import annotations

from fractions import Fraction

from .complexes import FilteredComplex
from .errors import (
    AdmissibilityFailure,
    FlagMismatch,
    NotCompatible,
    NotNilpotent,
    NotSl2,
    SeedInvalid,
)
from .exactla import (
    Matrix,
    Subspace,
    image_basis,
    kernel_basis,
    rat,
    restrict_map,
    solve_linear,
)


class _Nonexistent:
    """Sentinel: the requested relative filtration does not exist."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "NONEXISTENT"

    def __bool__(self):
        return False


NONEXISTENT = _Nonexistent()


class Flag:
    """A nested family of subspaces of Q^n indexed by rationals.

    Increasing flags are zero below their least stored index; decreasing
    flags are full there.  The value at k is the step at the greatest
    stored index <= k, so the stored top step is the stable value; for an
    increasing flag it must be the full space, for a decreasing one zero
    (exhaustiveness).  Steps at which the subspace does not change are
    dropped, so equal flags compare equal as data.
    """

    __slots__ = ("ambient_dim", "direction", "steps")

    def __init__(self, ambient_dim, direction, steps):
        if direction not in ("inc", "dec"):
            raise ValueError("direction must be 'inc' or 'dec'")
        cleaned = sorted(((rat(k), s) for k, s in steps), key=lambda t: t[0])
        for _, s in cleaned:
            if s.ambient_dim != ambient_dim:
                raise ValueError("flag step in wrong ambient dimension")
        below = Subspace.zero(ambient_dim) if direction == "inc" else Subspace.full(ambient_dim)
        minimal = []
        for k, s in cleaned:
            previous = minimal[-1][1] if minimal else below
            if previous == s:
                continue
            if minimal and minimal[-1][0] == k:
                raise ValueError(f"two distinct steps at index {k}")
            minimal.append((k, s))
        for (_, lo), (_, hi) in zip(minimal, minimal[1:]):
            bigger, smaller = (hi, lo) if direction == "inc" else (lo, hi)
            if not bigger.contains_subspace(smaller):
                raise ValueError("flag steps are not nested")
        if direction == "inc":
            if not minimal or minimal[-1][1] != Subspace.full(ambient_dim):
                minimal.append(
                    ((minimal[-1][0] + 1) if minimal else Fraction(0), Subspace.full(ambient_dim))
                )
        else:
            if not minimal or minimal[-1][1] != Subspace.zero(ambient_dim):
                minimal.append(
                    ((minimal[-1][0] + 1) if minimal else Fraction(0), Subspace.zero(ambient_dim))
                )
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "direction", direction)
        object.__setattr__(self, "steps", tuple(minimal))

    def __setattr__(self, name, value):
        raise AttributeError("Flag is immutable")

    @staticmethod
    def single_jump(ambient_dim, direction, index) -> "Flag":
        """Zero below `index`, full from it on (inc); mirrored for dec."""
        if direction == "inc":
            return Flag(ambient_dim, "inc", [(index, Subspace.full(ambient_dim))])
        return Flag(
            ambient_dim,
            "dec",
            [(index - 1, Subspace.full(ambient_dim)), (index, Subspace.zero(ambient_dim))],
        ) if ambient_dim else Flag(ambient_dim, "dec", [])

    def value_at(self, k) -> Subspace:
        k = rat(k)
        chosen = None
        for idx, sub in self.steps:
            if idx <= k:
                chosen = sub
            else:
                break
        if chosen is not None:
            return chosen
        return (
            Subspace.zero(self.ambient_dim)
            if self.direction == "inc"
            else Subspace.full(self.ambient_dim)
        )

    def jumps(self) -> list:
        return [k for k, _ in self.steps]

    def __eq__(self, other):
        return (
            isinstance(other, Flag)
            and self.ambient_dim == other.ambient_dim
            and self.direction == other.direction
            and self.steps == other.steps
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.direction, self.steps))

    def __repr__(self):
        parts = ", ".join(f"{k}:{s.dim}" for k, s in self.steps)
        return f"Flag({self.direction}, dim {self.ambient_dim}; {parts})"

    def shift(self, s) -> "Flag":
        """Reindex k -> k + s."""
        s = rat(s)
        return Flag(self.ambient_dim, self.direction, [(k + s, sub) for k, sub in self.steps])

    def map_forward(self, m: Matrix) -> "Flag":
        """Image flag under a surjective linear map."""
        return Flag(
            m.rows,
            self.direction,
            [(k, sub.image_under(m)) for k, sub in self.steps],
        )

    def restrict_to(self, sub: Subspace) -> "Flag":
        """Induced flag on `sub`, written in the canonical basis of `sub`."""
        steps = []
        for k, s in self.steps:
            meet = s.intersect(sub)
            coords = []
            for v in meet.basis_vectors():
                c = solve_linear(sub.basis, v)
                coords.append(c)
            steps.append((k, Subspace(sub.dim, coords)))
        return Flag(sub.dim, self.direction, steps)

    def quotient_by(self, sub: Subspace) -> "Flag":
        """Induced flag on the canonical quotient by `sub`."""
        proj = sub.quotient_map()
        return Flag(
            proj.rows,
            self.direction,
            [(k, s.image_under(proj)) for k, s in self.steps],
        )


def _graded_matrix(m: Matrix, flag_src: Flag, k_src, flag_tgt: Flag, k_tgt) -> Matrix:
    """Matrix induced by m on gr_{k_src} -> gr_{k_tgt} of increasing flags."""
    src_k = flag_src.value_at(k_src)
    src_k1 = flag_src.value_at(rat(k_src) - 1)
    tgt_k = flag_tgt.value_at(k_tgt)
    tgt_k1 = flag_tgt.value_at(rat(k_tgt) - 1)
    inner = restrict_map(m, src_k, tgt_k)
    sub_src = _coords_inside(src_k1, src_k)
    sub_tgt = _coords_inside(tgt_k1, tgt_k)
    from .exactla import induced_quotient_map

    return induced_quotient_map(inner, sub_src, sub_tgt)


def _coords_inside(inner: Subspace, outer: Subspace) -> Subspace:
    """`inner` as a subspace of Q^(dim outer) via the basis of `outer`."""
    coords = []
    for v in inner.basis_vectors():
        c = solve_linear(outer.basis, v)
        if c is None:
            raise ValueError("inner subspace not contained in outer")
        coords.append(c)
    return Subspace(outer.dim, coords)


def monodromy_filtration(n: Matrix, center=0) -> Flag:
    """The unique increasing flag W with n(W_k) <= W_{k-2} and n^i an
    isomorphism gr_{center+i} -> gr_{center-i} for all i > 0."""
    if not n.is_nilpotent():
        raise NotNilpotent("matrix is not nilpotent")
    dim = n.rows
    center = rat(center)
    if dim == 0:
        return Flag(0, "inc", [(center, Subspace.full(0))])
    d = n.nilpotency_index()
    kernels = []
    images = []
    power = Matrix.identity(dim)
    for _ in range(d + 2):
        kernels.append(kernel_basis(power))
        images.append(image_basis(power))
        power = power @ n
    steps = []
    for t in range(-d - 1, d + 2):
        total = Subspace.zero(dim)
        for j in range(d + 1):
            if j - t >= d + 1:
                continue  # the image factor is zero
            ker = kernels[min(j + 1, d + 1)]
            img = images[max(0, j - t)]
            total = total.sum(ker.intersect(img))
            if total.dim == dim:
                break
        steps.append((center + t, total))
    return Flag(dim, "inc", steps)


def weight_conditions_hold(n: Matrix, flag: Flag, center: int = 0) -> bool:
    """Verify the two defining conditions of the weight filtration.

    Independent of the construction in `monodromy_filtration`: checks
    n(W_k) <= W_{k-2} directly and builds each induced map on graded
    pieces to test bijectivity.
    """
    if flag.direction != "inc":
        return False
    lo = min(flag.jumps()) - 1
    hi = max(flag.jumps()) + 1
    k = lo
    while k <= hi:
        wk = flag.value_at(k)
        if not flag.value_at(k - 2).contains_subspace(wk.image_under(n)):
            return False
        k += 1
    d = n.nilpotency_index() if n.is_nilpotent() else n.rows + 1
    power = Matrix.identity(n.rows)
    for i in range(1, d + 2):
        power = power @ n
        try:
            induced = _graded_matrix(power, flag, center + i, flag, center - i)
        except ValueError:
            return False
        if induced.rows != induced.cols or induced.rank() != induced.rows:
            return False
    return True


def relative_monodromy_filtration(n: Matrix, lflag: Flag):
    """The unique flag W(n, L) when it exists, else NONEXISTENT.

    Built by downward induction on the number of jumps of L: the top step
    is peeled off, the filtration is computed on the subspace below it,
    and the remaining steps come from kernel and image formulas against
    that partial answer.  A full verification pass of both defining
    conditions decides existence.
    """
    if not n.is_nilpotent():
        raise NotNilpotent("matrix is not nilpotent")
    if lflag.direction != "inc":
        raise ValueError("the base filtration must be increasing")
    for k, step in lflag.steps:
        if not step.contains_subspace(step.image_under(n)):
            raise NotCompatible(f"operator does not preserve the filtration step at {k}")
    try:
        candidate = _relative_candidate(n, lflag)
    except ValueError:
        # the recursion produced non-nested steps, which already rules
        # the filtration out
        return NONEXISTENT
    if relative_conditions_hold(n, lflag, candidate):
        return candidate
    return NONEXISTENT


def _relative_candidate(n: Matrix, lflag: Flag) -> Flag:
    dim = n.rows
    if dim == 0:
        return lflag
    jumps = lflag.jumps()
    if len(jumps) <= 1:
        center = jumps[0] if jumps else 0
        return monodromy_filtration(n, center)
    b = jumps[-1]
    below = lflag.value_at(rat(b) - 1)
    n_below = restrict_map(n, below, below)
    l_below = lflag.restrict_to(below)
    inner = _relative_candidate(n_below, l_below)
    embed = below.basis

    def inner_at(k) -> Subspace:
        return inner.value_at(k).image_under(embed)

    d = n.nilpotency_index()
    steps = []
    upper: dict = {}
    for t in range(0, d + 2):
        k = rat(b) + t
        target = inner_at(k - 2 * t - 2)
        upper[k] = kernel_basis(target.quotient_map() @ n.power(t + 1))
        steps.append((k, upper[k]))
    inner_jumps = inner.jumps()
    floor = min([rat(b) - d] + [rat(j) - 1 for j in inner_jumps])
    k = rat(b) - 1
    while k >= floor:
        mirror = 2 * rat(b) - k
        high = upper.get(mirror, Subspace.full(dim))
        pushed = high.image_under(n.power(int(rat(b) - k)))
        steps.append((k, inner_at(k).sum(pushed)))
        k -= 1
    return Flag(dim, "inc", steps)


def relative_conditions_hold(n: Matrix, lflag: Flag, wflag: Flag) -> bool:
    """Check both defining conditions of W(n, L) for a candidate W."""
    indices = sorted(set(wflag.jumps()) | {k + 1 for k in wflag.jumps()})
    for k in indices:
        wk = wflag.value_at(k)
        if not wflag.value_at(rat(k) - 2).contains_subspace(wk.image_under(n)):
            return False
    for j in lflag.jumps():
        lj = lflag.value_at(j)
        lj1 = lflag.value_at(rat(j) - 1)
        if lj == lj1:
            continue
        proj_sub = _coords_inside(lj1, lj)
        proj = proj_sub.quotient_map()
        n_graded = proj @ restrict_map(n, lj, lj) @ _section_matrix(proj_sub)
        induced_steps = []
        for k, _ in wflag.steps:
            meet = _coords_inside(wflag.value_at(k).intersect(lj), lj)
            induced_steps.append((k, meet.image_under(proj)))
        induced = Flag(proj.rows, "inc", induced_steps)
        expected = monodromy_filtration(n_graded, 0).shift(j)
        if induced != expected:
            return False
    return True


def _section_matrix(sub: Subspace) -> Matrix:
    """Section of sub.quotient_map() using the free coordinates."""
    n = sub.ambient_dim
    pivot_set = set(sub._pivots)
    free = [c for c in range(n) if c not in pivot_set]
    return Matrix(n, len(free), [[1 if c == f else 0 for f in free] for c in range(n)])


# ---------------------------------------------------------------------------
# splitting operators


class DeligneSystem:
    """Grading data (L, N, Y, and optionally Y') on a space V.

    Y is an integer-semisimple operator whose eigenspace sums define an
    increasing filtration W; admissibility asks [Y, N] = -2N and that Y
    preserve L.  A completing operator Y' splits L, commutes with Y, and
    makes every nonzero-degree component of N primitive for the adjoint
    sl2-action generated by the degree-zero part of N.
    """

    def __init__(self, lflag: Flag, n: Matrix, y: Matrix, yprime: Matrix | None = None):
        self.dim = n.rows
        self.lflag = lflag
        self.n = n
        self.y = y
        self.yprime = yprime

    def weight_flag(self) -> Flag:
        eig = integer_eigenspaces(self.y)
        steps = []
        running = Subspace.zero(self.dim)
        for lam in sorted(eig):
            running = running.sum(eig[lam])
            steps.append((lam, running))
        return Flag(self.dim, "inc", steps)

    def violations(self) -> list[str]:
        out = []
        eig = integer_eigenspaces(self.y)
        if sum(s.dim for s in eig.values()) != self.dim:
            out.append("Y is not semisimple with integer eigenvalues")
        if self.y.commutator(self.n) != self.n.scale(-2):
            out.append("[Y, N] != -2N")
        for k, step in self.lflag.steps:
            if not step.contains_subspace(step.image_under(self.y)):
                out.append(f"Y does not preserve L at index {k}")
            if not step.contains_subspace(step.image_under(self.n)):
                out.append(f"N does not preserve L at index {k}")
        if self.yprime is not None:
            if self.y.commutator(self.yprime) != Matrix.zero(self.dim, self.dim):
                out.append("[Y, Y'] != 0")
            if not splits_flag(self.yprime, self.lflag):
                out.append("Y' does not split L")
            else:
                comps = ad_components(self.n, integer_eigenspaces(self.yprime))
                eminus = comps.get(0, Matrix.zero(self.dim, self.dim))
                h = self.y - self.yprime
                try:
                    eplus = solve_raising_operator(eminus, h)
                except NotSl2:
                    out.append("(N_0, Y - Y') does not extend to an sl2-pair")
                    return out
                for j, comp in comps.items():
                    if j != 0 and not eplus.commutator(comp).is_zero():
                        out.append(f"N component of degree {j} is not primitive")
        return out


def integer_eigenspaces(m: Matrix) -> dict[int, Subspace]:
    """Eigenspaces of an integer-semisimple matrix, by Gershgorin scan."""
    if m.rows == 0:
        return {}
    bound = int(max(sum(abs(x) for x in row) for row in m.entries))
    out = {}
    for lam in range(-bound, bound + 1):
        space = kernel_basis(m - Matrix.scalar(m.rows, lam))
        if space.dim:
            out[lam] = space
    return out


def splits_flag(op: Matrix, flag: Flag) -> bool:
    """Do the eigenspace partial sums of `op` reproduce the flag?"""
    if any(rat(k).denominator != 1 for k in flag.jumps()):
        return False
    eig = integer_eigenspaces(op)
    if sum(s.dim for s in eig.values()) != op.rows:
        return False
    running = Subspace.zero(op.rows)
    table = {}
    for lam in sorted(eig):
        running = running.sum(eig[lam])
        table[lam] = running
    lo = min(eig) if eig else 0
    hi = max(eig) if eig else 0
    k = lo - 1
    while k <= hi + 1:
        expected = Subspace.zero(op.rows)
        for lam in sorted(eig):
            if lam <= k:
                expected = table[lam]
        if flag.value_at(k) != expected:
            return False
        k += 1
    return True


def ad_components(m: Matrix, eigenspaces: dict[int, Subspace]) -> dict[int, Matrix]:
    """Graded components of m for the grading given by eigenspaces."""
    dim = m.rows
    if not eigenspaces:
        return {}
    projectors = {}
    # build projector onto each eigenspace along the others
    order = sorted(eigenspaces)
    basis_cols = []
    labels = []
    for lam in order:
        for v in eigenspaces[lam].basis_vectors():
            basis_cols.append(list(v))
            labels.append(lam)
    change = Matrix(dim, dim, [list(r) for r in zip(*basis_cols)])
    inverse = _invert(change)
    for lam in order:
        sel = Matrix(
            dim,
            dim,
            [
                [1 if (i == j and labels[i] == lam) else 0 for j in range(dim)]
                for i in range(dim)
            ],
        )
        projectors[lam] = change @ sel @ inverse
    comps: dict[int, Matrix] = {}
    for src in order:
        for dst in order:
            piece = projectors[dst] @ m @ projectors[src]
            if not piece.is_zero():
                j = dst - src
                comps[j] = comps.get(j, Matrix.zero(dim, dim)) + piece
    return comps


def _invert(m: Matrix) -> Matrix:
    from .exactla import row_reduce

    augmented = m.hstack(Matrix.identity(m.rows))
    rref, rank, _ = row_reduce(augmented)
    if rank < m.rows:
        raise ValueError("matrix is singular")
    return rref.submatrix(range(m.rows), range(m.cols, 2 * m.cols))


def _vec(m: Matrix) -> list:
    return [x for row in m.entries for x in row]


def _unvec(v, n: int) -> Matrix:
    return Matrix(n, n, [v[i * n : (i + 1) * n] for i in range(n)])


def _ad_matrix(a: Matrix) -> Matrix:
    """Matrix of X -> [a, X] on row-major vectorized n x n matrices."""
    from .complexes import kronecker

    n = a.rows
    return kronecker(a, Matrix.identity(n)) - kronecker(Matrix.identity(n), a.transpose())


def solve_raising_operator(eminus: Matrix, h: Matrix) -> Matrix:
    """Solve [e+, e-] = h, [h, e+] = 2 e+ for e+; NotSl2 if inconsistent."""
    n = eminus.rows
    if n == 0:
        return Matrix.zero(0, 0)
    ad_h = _ad_matrix(h)
    # [X, e-] = h  <=>  -ad_{e-}(X) = h
    eq1 = _ad_matrix(eminus).scale(-1)
    eq2 = ad_h - Matrix.scalar(n * n, 2)
    system = eq1.vstack(eq2)
    rhs = _vec(h) + [Fraction(0)] * (n * n)
    sol = solve_linear(system, rhs)
    if sol is None:
        raise NotSl2("no raising operator completes the pair")
    return _unvec(sol, n)


def sl2_primitive_decomposition(eminus: Matrix, h: Matrix, x: Matrix):
    """Write x = x' + [e-, x''] with x' primitive and x'' one degree up.

    (eminus, h) must extend to an sl2-pair (the raising operator is solved
    for internally) and x must be ad-h homogeneous of degree >= -1.
    Returns (primitive part, exact-part witness x'').
    """
    eplus = solve_raising_operator(eminus, h)
    return _lefschetz_split(eminus, eplus, h, x)


def _lefschetz_split(eminus: Matrix, eplus: Matrix, h: Matrix, x: Matrix):
    n = x.rows
    zero = Matrix.zero(n, n)
    if x.is_zero():
        return zero, zero
    bracket = h.commutator(x)
    degree = None
    for i in range(n):
        for j in range(n):
            if x.entries[i][j] != 0:
                degree = bracket.entries[i][j] / x.entries[i][j]
                break
        if degree is not None:
            break
    if bracket != x.scale(degree):
        raise ValueError("input is not ad-h homogeneous")
    if degree < -1:
        raise ValueError("degree below -1: primitive decomposition unavailable")
    ad_h = _ad_matrix(h)
    ad_plus = _ad_matrix(eplus)
    ad_minus = _ad_matrix(eminus)
    nn = n * n
    prim_space = kernel_basis(ad_plus.vstack(ad_h - Matrix.scalar(nn, degree)))
    up_space = kernel_basis(ad_h - Matrix.scalar(nn, degree + 2))
    a_cols = prim_space.basis.cols
    columns = prim_space.basis.hstack(ad_minus @ up_space.basis)
    sol = solve_linear(columns, _vec(x))
    if sol is None:
        raise ValueError("primitive decomposition failed (pair is not sl2 on x)")
    xprime = _unvec(prim_space.basis.apply(sol[:a_cols]), n)
    xsecond = _unvec(up_space.basis.apply(sol[a_cols:]), n)
    return xprime, xsecond


def deligne_splitting(system: DeligneSystem, seed: Matrix) -> Matrix:
    """The unique splitting operator of L completing (L, N, Y).

    Successive approximation: at each stage the most negative seed-degree
    component of N failing primitivity is corrected by conjugating with
    1 + gamma, gamma = -x'' from the primitive decomposition of that
    component in the adjoint sl2-representation of (N_0, Y - seed).
    """
    n_op = system.n
    y = system.y
    lflag = system.lflag
    dim = system.dim
    if y.commutator(n_op) != n_op.scale(-2):
        raise AdmissibilityFailure("[Y, N] != -2N")
    for k, step in lflag.steps:
        if not step.contains_subspace(step.image_under(y)):
            raise AdmissibilityFailure(f"Y does not preserve L at index {k}")
        if not step.contains_subspace(step.image_under(n_op)):
            raise AdmissibilityFailure(f"N does not preserve L at index {k}")
    if not splits_flag(seed, lflag):
        raise SeedInvalid("seed does not split L")
    if not y.commutator(seed).is_zero():
        raise SeedInvalid("[Y, seed] != 0")

    seed_eig = integer_eigenspaces(seed)
    h = y - seed
    comps = ad_components(n_op, seed_eig)
    if any(j > 0 for j in comps):
        raise AdmissibilityFailure("N has a positive seed-degree component")
    eminus = comps.get(0, Matrix.zero(dim, dim))
    eplus = solve_raising_operator(eminus, h)
    eplus = ad_components(eplus, seed_eig).get(0, Matrix.zero(dim, dim))
    if eminus.commutator(eplus).scale(-1) != h or h.commutator(eplus) != eplus.scale(2):
        # degree-zero projection must still satisfy the relations
        raise NotSl2("no seed-degree-zero raising operator exists")

    degrees = sorted(seed_eig)
    span = degrees[-1] - degrees[0] if degrees else 0
    n_cur = n_op
    total = Matrix.identity(dim)
    for k in range(1, span + 1):
        comps = ad_components(n_cur, seed_eig)
        component = comps.get(-k)
        if component is None or eplus.commutator(component).is_zero():
            continue
        _, witness = _lefschetz_split(eminus, eplus, h, component)
        gamma = witness.scale(-1)
        g = Matrix.identity(dim) + gamma
        g_inv = _nilpotent_inverse(gamma)
        n_cur = g_inv @ n_cur @ g
        total = total @ g
    comps = ad_components(n_cur, seed_eig)
    if comps.get(0, Matrix.zero(dim, dim)) != eminus:
        raise RuntimeError("degree-zero part drifted during the correction loop")
    for j, comp in comps.items():
        if j != 0 and not eplus.commutator(comp).is_zero():
            raise RuntimeError("correction loop failed to reach a primitive system")
    total_inv = _nilpotent_inverse(total - Matrix.identity(dim))
    return total @ seed @ total_inv


def _nilpotent_inverse(gamma: Matrix) -> Matrix:
    """(1 + gamma)^(-1) for nilpotent gamma, by the finite Neumann series."""
    n = gamma.rows
    result = Matrix.identity(n)
    term = Matrix.identity(n)
    for _ in range(n):
        term = (term @ gamma).scale(-1)
        if term.is_zero():
            break
        result = result + term
    return result


def bigrading_dims(y: Matrix, yprime: Matrix) -> dict[tuple[int, int], int]:
    """Dimensions of the simultaneous (Y, Y')-eigenspaces."""
    out = {}
    for lam, space in integer_eigenspaces(y).items():
        for mu, space2 in integer_eigenspaces(yprime).items():
            d = space.intersect(space2).dim
            if d:
                out[(lam, mu)] = d
    return out


# ---------------------------------------------------------------------------
# strictness and spectral sequences


def _check_flag_preserved(c: FilteredComplex, name: str):
    for k in c.degrees():
        if k + 1 not in c.terms:
            continue
        src = c.flag(name, k)
        tgt = c.flag(name, k + 1)
        if src is None or tgt is None:
            raise FlagMismatch(f"flag {name!r} missing at degree {k} or {k + 1}")
        if src.direction != tgt.direction:
            raise FlagMismatch("flag directions differ between degrees")
        d = c.differential(k)
        for p in src.jumps():
            if not tgt.value_at(p).contains_subspace(src.value_at(p).image_under(d)):
                raise FlagMismatch(
                    f"differential at degree {k} does not preserve {name!r} at level {p}"
                )


def strictness_check(c: FilteredComplex, flag_name: str = "F") -> bool:
    """True iff every differential is strict for the named flag.

    Computes both characterizations (image identity per differential, and
    injectivity of the homology of flag subcomplexes into homology) and
    requires them to agree.
    """
    _check_flag_preserved(c, flag_name)
    levels = c.flag_indices(flag_name)

    by_images = True
    for k in c.degrees():
        if k + 1 not in c.terms:
            continue
        d = c.differential(k)
        img = image_basis(d)
        src = c.flag(flag_name, k)
        tgt = c.flag(flag_name, k + 1)
        for p in levels:
            meet = tgt.value_at(p).intersect(img)
            mapped = src.value_at(p).image_under(d)
            if meet != mapped:
                by_images = False

    by_injectivity = True
    for p in levels:
        for k in c.degrees():
            cycles = c.cycles(k)
            flag_k = c.flag(flag_name, k)
            step = flag_k.value_at(p)
            boundary = c.boundaries(k)
            inside = cycles.intersect(step).intersect(boundary)
            if k - 1 in c.terms:
                from_below = c.flag(flag_name, k - 1).value_at(p).image_under(
                    c.differential(k - 1)
                )
            else:
                from_below = Subspace.zero(c.terms[k])
            if inside != from_below:
                by_injectivity = False

    if by_images != by_injectivity:
        raise RuntimeError("strictness characterizations disagree (internal error)")
    return by_images


def bistrictness_check(
    phi: Matrix, source_f: Flag, source_g: Flag, target_f: Flag, target_g: Flag
) -> bool:
    """Strictness for both flags plus the two mixed-step identities."""
    for src, tgt, label in ((source_f, target_f, "F"), (source_g, target_g, "G")):
        for p in src.jumps():
            if not tgt.value_at(p).contains_subspace(src.value_at(p).image_under(phi)):
                raise FlagMismatch(f"map does not preserve flag {label} at level {p}")
    img = image_basis(phi)
    p_levels = sorted(set(source_f.jumps()) | set(target_f.jumps()))
    q_levels = sorted(set(source_g.jumps()) | set(target_g.jumps()))
    for p in p_levels:
        if target_f.value_at(p).intersect(img) != source_f.value_at(p).image_under(phi):
            return False
    for q in q_levels:
        if target_g.value_at(q).intersect(img) != source_g.value_at(q).image_under(phi):
            return False
    for p in p_levels:
        for q in q_levels:
            both_tgt = target_f.value_at(p).intersect(target_g.value_at(q))
            both_src = source_f.value_at(p).intersect(source_g.value_at(q))
            if both_tgt.intersect(img) != both_src.image_under(phi):
                return False
            lhs = target_f.value_at(p).sum(img).intersect(target_g.value_at(q).sum(img))
            rhs = both_tgt.sum(img)
            if lhs != rhs:
                return False
    return True


def spectral_sequence_page(
    c: FilteredComplex, r: int, flag_name: str = "W"
) -> dict[tuple[int, int], int]:
    """Dimensions of the page-r terms for the named flag.

    Increasing flags are converted to the decreasing convention by
    negating the level.  Entries with dimension zero are omitted.
    """
    if r < 1:
        raise ValueError("page index must be >= 1")
    _check_flag_preserved(c, flag_name)
    sample = next(iter(c.flags[flag_name].values()))
    increasing = sample.direction == "inc"
    raw = c.flag_indices(flag_name)
    if any(rat(p).denominator != 1 for p in raw):
        raise ValueError("spectral sequences need integer-indexed flags")
    p_values = sorted({-int(p) for p in raw} if increasing else {int(p) for p in raw})
    p_lo, p_hi = p_values[0] - r - 1, p_values[-1] + r + 1

    def filt(n: int, p: int) -> Subspace:
        if n not in c.terms:
            return Subspace.zero(0)
        flag = c.flag(flag_name, n)
        if flag is None:
            return Subspace.full(c.terms[n])
        return flag.value_at(-p) if increasing else flag.value_at(p)

    def z_space(rr: int, p: int, n: int) -> Subspace:
        base = filt(n, p)
        if n + 1 not in c.terms:
            return base
        target = filt(n + 1, p + rr)
        return base.intersect(target.preimage_under(c.differential(n)))

    table = {}
    for n in c.degrees():
        for p in range(p_lo, p_hi + 1):
            q = n - p
            z_r = z_space(r, p, n)
            killers = z_space(r - 1, p + 1, n)
            if n - 1 in c.terms:
                prior = z_space(r - 1, p - r + 1, n - 1)
                killers = killers.sum(prior.image_under(c.differential(n - 1)))
            dim = z_r.dim - killers.intersect(z_r).dim
            if dim:
                table[(p, q)] = dim
    return table
