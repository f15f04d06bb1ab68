"""Cochain complexes of finite-dimensional Q-vector spaces with flags."""

from __future__ import annotations

from fractions import Fraction

from .exactla import Matrix, Subspace, image_basis, kernel_basis


class FilteredComplex:
    """A bounded cochain complex with optional named flags on each term.

    `terms` maps a degree to the ambient dimension of that term, and
    `differentials[k]` is the matrix of d: term k -> term k+1.  Flags are
    stored per name, per degree; construction checks d o d = 0 exactly but
    flag preservation is checked by the operations that rely on it.
    """

    def __init__(self, terms, differentials, flags=None, metadata=None):
        self.terms = dict(sorted(terms.items()))
        self.differentials = dict(differentials)
        self.flags = {name: dict(table) for name, table in (flags or {}).items()}
        self.metadata = dict(metadata or {})
        degrees = sorted(self.terms)
        for k in degrees:
            d = self.differentials.get(k)
            if k + 1 in self.terms:
                if d is None:
                    self.differentials[k] = Matrix.zero(self.terms[k + 1], self.terms[k])
                    d = self.differentials[k]
                if d.cols != self.terms[k] or d.rows != self.terms[k + 1]:
                    raise ValueError(f"differential at degree {k} has wrong shape")
            elif d is not None and not d.is_zero():
                raise ValueError(f"differential leaving top degree {k} must vanish")
        for k in degrees:
            if k + 2 in self.terms:
                comp = self.differentials[k + 1] @ self.differentials[k]
                if not comp.is_zero():
                    raise ValueError(f"d o d != 0 between degrees {k} and {k + 2}")

    def degrees(self) -> list[int]:
        return sorted(self.terms)

    def differential(self, k: int) -> Matrix:
        d = self.differentials.get(k)
        if d is None:
            target = self.terms.get(k + 1, 0)
            d = Matrix.zero(target, self.terms.get(k, 0))
        return d

    def flag(self, name: str, k: int):
        return self.flags.get(name, {}).get(k)

    def flag_indices(self, name: str) -> list:
        seen = set()
        for table in self.flags.get(name, {}).values():
            seen.update(table.jumps())
        return sorted(seen)

    def cycles(self, k: int) -> Subspace:
        if k not in self.terms:
            return Subspace.zero(0)
        return kernel_basis(self.differential(k))

    def boundaries(self, k: int) -> Subspace:
        if k - 1 not in self.terms:
            return Subspace.zero(self.terms.get(k, 0))
        return image_basis(self.differential(k - 1))

    def homology_dims(self) -> dict[int, int]:
        out = {}
        for k in self.degrees():
            out[k] = self.cycles(k).dim - self.boundaries(k).dim
        return out

    def is_exact(self) -> bool:
        return all(h == 0 for h in self.homology_dims().values())

    def subcomplex_dims(self, name: str, p) -> dict[int, int]:
        """Homology dimensions of the flag-level-p subcomplex."""
        return self.flag_subcomplex(name, p).homology_dims()

    def flag_subcomplex(self, name: str, p) -> "FilteredComplex":
        """The subcomplex of flag steps at level p (flags must be preserved)."""
        terms = {}
        diffs = {}
        steps = {}
        for k in self.degrees():
            flag = self.flag(name, k)
            step = flag.value_at(p) if flag is not None else Subspace.full(self.terms[k])
            steps[k] = step
            terms[k] = step.dim
        from .exactla import restrict_map

        for k in self.degrees():
            if k + 1 in self.terms:
                diffs[k] = restrict_map(self.differential(k), steps[k], steps[k + 1])
        return FilteredComplex(terms, diffs)


def tensor_subspace(a: Subspace, b: Subspace) -> Subspace:
    """Image of a (x) b inside Q^(ma*mb) under the Kronecker identification."""
    vectors = []
    for u in a.basis_vectors():
        for v in b.basis_vectors():
            vectors.append([x * y for x in u for y in v])
    return Subspace(a.ambient_dim * b.ambient_dim, vectors)


def kronecker(a: Matrix, b: Matrix) -> Matrix:
    rows = a.rows * b.rows
    cols = a.cols * b.cols
    entries = [
        [
            a.entries[i // b.rows][j // b.cols] * b.entries[i % b.rows][j % b.cols]
            for j in range(cols)
        ]
        for i in range(rows)
    ]
    return Matrix(rows, cols, entries)


def tensor_complex(c1: FilteredComplex, c2: FilteredComplex, flag_names=()) -> FilteredComplex:
    """Total complex of the double complex c1 (x) c2.

    Term n is the direct sum over i+j = n of C1_i (x) C2_j, ordered by
    increasing i; the differential is d1 (x) 1 + (-1)^i (x) d2.  Requested
    flags are combined by convolution of levels.
    """
    pairs_by_total: dict[int, list[tuple[int, int]]] = {}
    for i in c1.degrees():
        for j in c2.degrees():
            pairs_by_total.setdefault(i + j, []).append((i, j))
    for pairs in pairs_by_total.values():
        pairs.sort()

    terms = {}
    offsets = {}
    for n, pairs in sorted(pairs_by_total.items()):
        dim = 0
        for (i, j) in pairs:
            offsets[(i, j)] = dim
            dim += c1.terms[i] * c2.terms[j]
        terms[n] = dim

    diffs = {}
    for n in sorted(pairs_by_total):
        if n + 1 not in terms:
            continue
        rows = terms[n + 1]
        cols = terms[n]
        grid = [[Fraction(0)] * cols for _ in range(rows)]

        def place(block: Matrix, src: tuple[int, int], dst: tuple[int, int]):
            r0 = offsets[dst]
            c0 = offsets[src]
            for i in range(block.rows):
                for j in range(block.cols):
                    if block.entries[i][j] != 0:
                        grid[r0 + i][c0 + j] = grid[r0 + i][c0 + j] + block.entries[i][j]

        for (i, j) in pairs_by_total[n]:
            if i + 1 in c1.terms and (i + 1, j) in offsets:
                place(
                    kronecker(c1.differential(i), Matrix.identity(c2.terms[j])),
                    (i, j),
                    (i + 1, j),
                )
            if j + 1 in c2.terms and (i, j + 1) in offsets:
                sign = -1 if i % 2 else 1
                place(
                    kronecker(Matrix.identity(c1.terms[i]), c2.differential(j)).scale(sign),
                    (i, j),
                    (i, j + 1),
                )
        diffs[n] = Matrix(rows, cols, grid)

    flags = {}
    for name in flag_names:
        from .filtration import Flag

        table = {}
        idx1 = c1.flag_indices(name)
        idx2 = c2.flag_indices(name)
        for n, pairs in sorted(pairs_by_total.items()):
            levels = sorted({p1 + p2 for p1 in idx1 for p2 in idx2})
            steps = []
            for p in levels:
                vectors = []
                for (i, j) in pairs:
                    f1 = c1.flag(name, i)
                    f2 = c2.flag(name, j)
                    block = Subspace.zero(c1.terms[i] * c2.terms[j])
                    for p1 in idx1:
                        part = tensor_subspace(f1.value_at(p1), f2.value_at(p - p1))
                        block = block.sum(part)
                    off = offsets[(i, j)]
                    for v in block.basis_vectors():
                        padded = [Fraction(0)] * terms[n]
                        padded[off : off + len(v)] = v
                        vectors.append(padded)
                steps.append((p, Subspace(terms[n], vectors)))
            # top out with the full space so the flag is exhaustive
            top = max(levels) + 1 if levels else 0
            steps.append((top, Subspace.full(terms[n])))
            table[n] = Flag(terms[n], "inc", steps)
        flags[name] = table

    meta = {"tensor_of": (c1.metadata, c2.metadata)}
    return FilteredComplex(terms, diffs, flags, meta)
