"""Exact rational linear algebra: matrices, row reduction, subspaces.

Everything is computed over Q with `fractions.Fraction` entries; no floats
appear anywhere.  Subspaces carry a canonical reduced-echelon basis so that
two equal subspaces compare equal as data.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .errors import AmbientMismatch

Rational = Fraction


def rat(value) -> Fraction:
    """Coerce ints, strings like '3/4' or '-2', and Fractions to Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as a rational")


def rat_str(value: Fraction) -> str:
    """Canonical string form 'a/b' (or 'a' for integers)."""
    value = rat(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class Matrix:
    """Immutable dense matrix over Q, row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable[Iterable]):
        data = tuple(tuple(rat(x) for x in row) for row in entries)
        if len(data) != rows or any(len(r) != cols for r in data):
            raise ValueError(f"entry grid does not match shape {rows}x{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", data)

    def __setattr__(self, name, value):
        raise AttributeError("Matrix is immutable")

    @staticmethod
    def from_rows(rows: Sequence[Sequence]) -> "Matrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        return Matrix(len(rows), ncols, rows)

    @staticmethod
    def zero(rows: int, cols: int) -> "Matrix":
        return Matrix(rows, cols, [[0] * cols for _ in range(rows)])

    @staticmethod
    def identity(n: int) -> "Matrix":
        return Matrix(n, n, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @staticmethod
    def scalar(n: int, value) -> "Matrix":
        value = rat(value)
        return Matrix(n, n, [[value if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and self.entries == other.entries
        )

    def __hash__(self):
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self):
        if self.rows == 0 or self.cols == 0:
            return f"Matrix({self.rows}x{self.cols})"
        body = "; ".join(" ".join(rat_str(x) for x in row) for row in self.entries)
        return f"Matrix({self.rows}x{self.cols}: {body})"

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> tuple:
        return self.entries[i]

    def column(self, j: int) -> tuple:
        return tuple(self.entries[i][j] for i in range(self.rows))

    def __add__(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch in matrix addition")
        return Matrix(
            self.rows,
            self.cols,
            [
                [a + b for a, b in zip(r1, r2)]
                for r1, r2 in zip(self.entries, other.entries)
            ],
        )

    def __sub__(self, other: "Matrix") -> "Matrix":
        return self + (-other)

    def __neg__(self) -> "Matrix":
        return self.scale(-1)

    def scale(self, c) -> "Matrix":
        c = rat(c)
        return Matrix(self.rows, self.cols, [[c * x for x in row] for row in self.entries])

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        zero = Fraction(0)
        out = []
        for row in self.entries:
            acc = [zero] * other.cols
            for k, a in enumerate(row):
                if a:
                    orow = other.entries[k]
                    acc = [x + a * y if y else x for x, y in zip(acc, orow)]
            out.append(acc)
        return Matrix(self.rows, other.cols, out)

    def apply(self, vector: Sequence) -> list:
        """Matrix times column vector, returned as a list."""
        vec = [rat(x) for x in vector]
        if len(vec) != self.cols:
            raise ValueError("vector length does not match column count")
        zero = Fraction(0)
        out = []
        for row in self.entries:
            total = zero
            for a, b in zip(row, vec):
                if a and b:
                    total += a * b
            out.append(total)
        return out

    def transpose(self) -> "Matrix":
        return Matrix(
            self.cols,
            self.rows,
            [[self.entries[i][j] for i in range(self.rows)] for j in range(self.cols)],
        )

    def hstack(self, other: "Matrix") -> "Matrix":
        if self.rows != other.rows:
            raise ValueError("row count mismatch in hstack")
        return Matrix(
            self.rows,
            self.cols + other.cols,
            [r1 + r2 for r1, r2 in zip(self.entries, other.entries)],
        )

    def vstack(self, other: "Matrix") -> "Matrix":
        if self.cols != other.cols:
            raise ValueError("column count mismatch in vstack")
        return Matrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "Matrix":
        return Matrix(
            len(row_idx),
            len(col_idx),
            [[self.entries[i][j] for j in col_idx] for i in row_idx],
        )

    def power(self, k: int) -> "Matrix":
        if self.rows != self.cols:
            raise ValueError("power of a non-square matrix")
        result = Matrix.identity(self.rows)
        for _ in range(k):
            result = result @ self
        return result

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def commutator(self, other: "Matrix") -> "Matrix":
        return self @ other - other @ self

    def rank(self) -> int:
        return row_reduce(self)[1]

    def is_nilpotent(self) -> bool:
        if self.rows != self.cols:
            return False
        return self.power(self.rows).is_zero()

    def nilpotency_index(self) -> int:
        """Least k with self**k = 0; raises if not nilpotent."""
        power = Matrix.identity(self.rows)
        for k in range(self.rows + 1):
            if power.is_zero():
                return k
            power = power @ self
        raise ValueError("matrix is not nilpotent")


def row_reduce(m: Matrix) -> tuple[Matrix, int, list[int]]:
    """Reduced row-echelon form of `m` with its rank and pivot columns."""
    data = [list(row) for row in m.entries]
    nrows, ncols = m.rows, m.cols
    pivots: list[int] = []
    pivot_row = 0
    for col in range(ncols):
        chosen = None
        for i in range(pivot_row, nrows):
            if data[i][col] != 0:
                chosen = i
                break
        if chosen is None:
            continue
        data[pivot_row], data[chosen] = data[chosen], data[pivot_row]
        inv = 1 / data[pivot_row][col]
        data[pivot_row] = [x * inv if x else x for x in data[pivot_row]]
        pivot_data = data[pivot_row]
        for i in range(nrows):
            if i != pivot_row and data[i][col] != 0:
                factor = data[i][col]
                data[i] = [
                    a - factor * b if b else a for a, b in zip(data[i], pivot_data)
                ]
        pivots.append(col)
        pivot_row += 1
        if pivot_row == nrows:
            break
    return Matrix(nrows, ncols, data), len(pivots), pivots


class Subspace:
    """Subspace of Q^n with a canonical reduced-echelon basis.

    The basis is stored as the columns of `basis`; the rows of the
    transposed basis are in reduced row-echelon form, so two equal
    subspaces have identical `basis` matrices.
    """

    __slots__ = ("ambient_dim", "basis", "_pivots")

    def __init__(self, ambient_dim: int, vectors: Iterable[Sequence] = ()):
        rows = [[rat(x) for x in v] for v in vectors]
        for v in rows:
            if len(v) != ambient_dim:
                raise AmbientMismatch(
                    f"vector of length {len(v)} in ambient dimension {ambient_dim}"
                )
        if rows:
            rref, rank, pivots = row_reduce(Matrix.from_rows(rows))
            basis_rows = rref.entries[:rank]
        else:
            basis_rows, pivots = [], []
        object.__setattr__(self, "ambient_dim", ambient_dim)
        object.__setattr__(self, "basis", Matrix.from_rows(basis_rows).transpose()
                           if basis_rows else Matrix.zero(ambient_dim, 0))
        object.__setattr__(self, "_pivots", tuple(pivots))

    def __setattr__(self, name, value):
        raise AttributeError("Subspace is immutable")

    @staticmethod
    def zero(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim)

    @staticmethod
    def full(ambient_dim: int) -> "Subspace":
        return Subspace(ambient_dim, Matrix.identity(ambient_dim).entries)

    @staticmethod
    def from_columns(m: Matrix) -> "Subspace":
        return Subspace(m.rows, m.transpose().entries)

    @property
    def dim(self) -> int:
        return self.basis.cols

    def basis_vectors(self) -> list[tuple]:
        return [self.basis.column(j) for j in range(self.dim)]

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.basis == other.basis
        )

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"Subspace(dim {self.dim} of Q^{self.ambient_dim})"

    def _check_ambient(self, other: "Subspace"):
        if self.ambient_dim != other.ambient_dim:
            raise AmbientMismatch(
                f"ambient dimensions differ: {self.ambient_dim} vs {other.ambient_dim}"
            )

    def contains(self, vector: Sequence) -> bool:
        vec = [rat(x) for x in vector]
        if len(vec) != self.ambient_dim:
            raise AmbientMismatch("vector length does not match ambient dimension")
        # reduce against the echelon rows (basis columns transposed)
        residual = list(vec)
        rows = self.basis.transpose().entries
        for row, pivot in zip(rows, self._pivots):
            coeff = residual[pivot]
            if coeff != 0:
                residual = [a - coeff * b for a, b in zip(residual, row)]
        return all(x == 0 for x in residual)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check_ambient(other)
        return all(self.contains(v) for v in other.basis_vectors())

    def sum(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        return Subspace(
            self.ambient_dim, list(self.basis_vectors()) + list(other.basis_vectors())
        )

    def intersect(self, other: "Subspace") -> "Subspace":
        self._check_ambient(other)
        if self.dim == 0 or other.dim == 0:
            return Subspace.zero(self.ambient_dim)
        # ker [A | -B] gives coefficient pairs with A a = B b
        stacked = self.basis.hstack(other.basis.scale(-1))
        coeffs = kernel_basis(stacked)
        vectors = []
        for v in coeffs.basis_vectors():
            vectors.append(self.basis.apply(v[: self.dim]))
        return Subspace(self.ambient_dim, vectors)

    def quotient_map(self) -> Matrix:
        """Projection Q^n -> Q^(n-dim) with kernel exactly this subspace.

        Coordinates of the quotient are the non-pivot coordinates of the
        canonical echelon basis, giving a canonical complement basis.
        """
        n = self.ambient_dim
        pivot_set = set(self._pivots)
        free = [c for c in range(n) if c not in pivot_set]
        rows = []
        echelon = self.basis.transpose().entries
        for c in free:
            row = [Fraction(0)] * n
            row[c] = Fraction(1)
            for basis_row, pivot in zip(echelon, self._pivots):
                row[pivot] = -basis_row[c]
            rows.append(row)
        return Matrix(len(free), n, rows)

    def image_under(self, m: Matrix) -> "Subspace":
        if m.cols != self.ambient_dim:
            raise AmbientMismatch("map domain does not match ambient dimension")
        return Subspace(m.rows, [m.apply(v) for v in self.basis_vectors()])

    def preimage_under(self, m: Matrix) -> "Subspace":
        """{v : m v in self} computed as a kernel."""
        if m.rows != self.ambient_dim:
            raise AmbientMismatch("map codomain does not match ambient dimension")
        proj = self.quotient_map()
        return kernel_basis(proj @ m)


def kernel_basis(m: Matrix) -> Subspace:
    """Exact kernel {v : m v = 0} as a subspace of Q^cols."""
    rref, rank, pivots = row_reduce(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    vectors = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -rref.entries[i][f]
        vectors.append(v)
    return Subspace(m.cols, vectors)


def image_basis(m: Matrix) -> Subspace:
    """Column space of m as a subspace of Q^rows."""
    return Subspace.from_columns(m)


def solve_linear(m: Matrix, rhs: Sequence):
    """One solution x of m x = rhs, or None if inconsistent."""
    vec = [rat(x) for x in rhs]
    if len(vec) != m.rows:
        raise ValueError("right-hand side length does not match row count")
    augmented = m.hstack(Matrix(m.rows, 1, [[x] for x in vec]))
    rref, rank, pivots = row_reduce(augmented)
    if m.cols in pivots:
        return None
    solution = [Fraction(0)] * m.cols
    for i, p in enumerate(pivots):
        solution[p] = rref.entries[i][m.cols]
    return solution


def restrict_map(m: Matrix, source: Subspace, target: Subspace) -> Matrix:
    """Matrix of m restricted to `source`, in the canonical bases.

    Requires m(source) <= target; raises ValueError otherwise.
    """
    cols = []
    for v in source.basis_vectors():
        image = m.apply(v)
        coords = solve_linear(target.basis, image)
        if coords is None:
            raise ValueError("map does not carry the source into the target")
        cols.append(coords)
    return Matrix(target.dim, source.dim, [list(r) for r in zip(*cols)]) \
        if cols else Matrix.zero(target.dim, 0)


def induced_quotient_map(m: Matrix, source_sub: Subspace, target_sub: Subspace) -> Matrix:
    """Matrix induced by m on the quotients by the given subspaces.

    Requires m(source_sub) <= target_sub so the induced map is defined.
    """
    if not target_sub.contains_subspace(source_sub.image_under(m)):
        raise ValueError("map does not descend to the quotients")
    proj_src = source_sub.quotient_map()
    proj_tgt = target_sub.quotient_map()
    # section of proj_src: free coordinates embed back
    n = source_sub.ambient_dim
    pivot_set = set(source_sub._pivots)
    free = [c for c in range(n) if c not in pivot_set]
    section = Matrix(
        n, len(free), [[1 if c == f else 0 for f in free] for c in range(n)]
    )
    return proj_tgt @ m @ section
