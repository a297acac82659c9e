"""Sparse exact matrices over Z, Q, F_p: arithmetic, Smith normal form,
kernels and exact solving.

Matrices are dicts keyed by (row, col) holding nonzero ring elements.
Everything is exact; no floating point anywhere.  Sizes here are desk
scale (a few hundred rows at most), so the classical fraction-free
algorithms are plenty.
"""

from __future__ import annotations

from .rings import Ring, ZZ


class SparseMatrix:
    def __init__(self, ring: Ring, nrows: int, ncols: int, entries=None):
        self.ring = ring
        self.nrows = nrows
        self.ncols = ncols
        self.entries: dict = {}
        if entries:
            for (i, j), v in entries.items():
                self[i, j] = v

    # -- basic access --------------------------------------------------
    def __getitem__(self, ij):
        return self.entries.get(ij, self.ring.zero)

    def __setitem__(self, ij, v):
        i, j = ij
        if not (0 <= i < self.nrows and 0 <= j < self.ncols):
            raise IndexError(f"entry {ij} out of shape {(self.nrows, self.ncols)}")
        if self.ring.is_zero(v):
            self.entries.pop(ij, None)
        else:
            self.entries[ij] = v

    def add_to(self, i, j, v):
        self[i, j] = self.ring.add(self[i, j], v)

    def copy(self) -> "SparseMatrix":
        m = SparseMatrix(self.ring, self.nrows, self.ncols)
        m.entries = dict(self.entries)
        return m

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        return (
            isinstance(other, SparseMatrix)
            and self.ring == other.ring
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and self.entries == other.entries
        )

    def __repr__(self):
        return f"SparseMatrix({self.ring}, {self.nrows}x{self.ncols}, nnz={len(self.entries)})"

    def to_rows(self):
        """Dense list-of-lists, mostly for tests and debugging."""
        rows = [[self.ring.zero] * self.ncols for _ in range(self.nrows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows

    @staticmethod
    def from_rows(ring: Ring, rows) -> "SparseMatrix":
        m = SparseMatrix(ring, len(rows), len(rows[0]) if rows else 0)
        for i, row in enumerate(rows):
            for j, v in enumerate(row):
                m[i, j] = ring.of(v)
        return m

    @staticmethod
    def identity(ring: Ring, n: int) -> "SparseMatrix":
        m = SparseMatrix(ring, n, n)
        for i in range(n):
            m[i, i] = ring.one
        return m

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        assert (self.nrows, self.ncols) == (other.nrows, other.ncols)
        m = self.copy()
        for ij, v in other.entries.items():
            m.add_to(*ij, v)
        return m

    def __sub__(self, other):
        return self + other.scale(self.ring.neg(self.ring.one))

    def scale(self, c) -> "SparseMatrix":
        m = SparseMatrix(self.ring, self.nrows, self.ncols)
        for ij, v in self.entries.items():
            m[ij] = self.ring.mul(c, v)
        return m

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        assert self.ncols == other.nrows, (self.ncols, other.nrows)
        R = self.ring
        out = SparseMatrix(R, self.nrows, other.ncols)
        by_row: dict = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        for (i, k), u in self.entries.items():
            for j, v in by_row.get(k, ()):
                out.add_to(i, j, R.mul(u, v))
        return out

    def transpose(self) -> "SparseMatrix":
        m = SparseMatrix(self.ring, self.ncols, self.nrows)
        for (i, j), v in self.entries.items():
            m[j, i] = v
        return m

    def column(self, j) -> "SparseMatrix":
        c = SparseMatrix(self.ring, self.nrows, 1)
        for i in range(self.nrows):
            c[i, 0] = self[i, j]
        return c

    @staticmethod
    def hstack(blocks) -> "SparseMatrix":
        blocks = list(blocks)
        nr = blocks[0].nrows
        assert all(b.nrows == nr for b in blocks)
        out = SparseMatrix(blocks[0].ring, nr, sum(b.ncols for b in blocks))
        off = 0
        for b in blocks:
            for (i, j), v in b.entries.items():
                out[i, j + off] = v
            off += b.ncols
        return out

    # -- row/col operations (shared by SNF and elimination) ------------
    def _swap_rows(self, i, k):
        if i == k:
            return
        new = {}
        for (r, c), v in self.entries.items():
            r2 = k if r == i else i if r == k else r
            new[(r2, c)] = v
        self.entries = new

    def _swap_cols(self, j, k):
        if j == k:
            return
        new = {}
        for (r, c), v in self.entries.items():
            c2 = k if c == j else j if c == k else c
            new[(r, c2)] = v
        self.entries = new

    def _addmul_row(self, dst, src, c):
        # row[dst] += c * row[src]
        R = self.ring
        for col in [cc for (r, cc) in list(self.entries.keys()) if r == src]:
            self.add_to(dst, col, R.mul(c, self[src, col]))

    def _addmul_col(self, dst, src, c):
        R = self.ring
        for row in [r for (r, cc) in list(self.entries.keys()) if cc == src]:
            self.add_to(row, dst, R.mul(c, self[row, src]))

    def _scale_row(self, i, c):
        for col in [cc for (r, cc) in list(self.entries.keys()) if r == i]:
            self[i, col] = self.ring.mul(c, self[i, col])

    def _scale_col(self, j, c):
        for row in [r for (r, cc) in list(self.entries.keys()) if cc == j]:
            self[row, j] = self.ring.mul(c, self[row, j])


# ---------------------------------------------------------------------
# Field elimination: rank, solving, kernel.
# ---------------------------------------------------------------------

def _field_echelon(M: SparseMatrix):
    """Row-reduce a copy of M over a field.

    Returns (R, ops, pivots) where R is the reduced matrix, ops the list of
    row operations applied (for solving), pivots the list of (row, col).
    """
    R = M.ring
    assert R.is_field
    A = M.copy()
    ops = []
    pivots = []
    prow = 0
    for col in range(A.ncols):
        sel = None
        for r in range(prow, A.nrows):
            if not R.is_zero(A[r, col]):
                sel = r
                break
        if sel is None:
            continue
        if sel != prow:
            A._swap_rows(sel, prow)
            ops.append(("swap", sel, prow))
        inv = R.inv(A[prow, col])
        A._scale_row(prow, inv)
        ops.append(("scale", prow, inv))
        for r in range(A.nrows):
            if r != prow and not R.is_zero(A[r, col]):
                c = R.neg(A[r, col])
                A._addmul_row(r, prow, c)
                ops.append(("addmul", r, prow, c))
        pivots.append((prow, col))
        prow += 1
        if prow == A.nrows:
            break
    return A, ops, pivots


def _apply_ops_to_column(ring, ops, b):
    """Apply recorded row operations to a dense column vector b (list)."""
    b = list(b)
    for op in ops:
        if op[0] == "swap":
            _, i, k = op
            b[i], b[k] = b[k], b[i]
        elif op[0] == "scale":
            _, i, c = op
            b[i] = ring.mul(c, b[i])
        else:
            _, dst, src, c = op
            b[dst] = ring.add(b[dst], ring.mul(c, b[src]))
    return b


def field_rank(M: SparseMatrix) -> int:
    _, _, pivots = _field_echelon(M)
    return len(pivots)


def field_kernel_basis(M: SparseMatrix) -> SparseMatrix:
    """Columns form a basis of ker(M) over the field."""
    R = M.ring
    A, _, pivots = _field_echelon(M)
    pivot_cols = {c: r for (r, c) in pivots}
    free = [j for j in range(M.ncols) if j not in pivot_cols]
    K = SparseMatrix(R, M.ncols, len(free))
    for idx, j in enumerate(free):
        K[j, idx] = R.one
        for c, r in pivot_cols.items():
            v = A[r, j]
            if not R.is_zero(v):
                K[c, idx] = R.neg(v)
    return K


def field_solve(M: SparseMatrix, B: SparseMatrix):
    """Solve M X = B over a field; returns X or None if inconsistent."""
    R = M.ring
    A, ops, pivots = _field_echelon(M)
    X = SparseMatrix(R, M.ncols, B.ncols)
    for bj in range(B.ncols):
        b = [B[i, bj] for i in range(B.nrows)]
        b = _apply_ops_to_column(R, ops, b)
        used = {r for (r, _) in pivots}
        for r in range(M.nrows):
            if r not in used and not R.is_zero(b[r]):
                return None
        for r, c in pivots:
            X[c, bj] = b[r]
    return X


# ---------------------------------------------------------------------
# Smith normal form over Z.
# ---------------------------------------------------------------------

def smith_normal_form(M: SparseMatrix):
    """Smith normal form over Z by fraction-free reduction.

    Returns (D, U, V) with U @ M @ V == D, U and V unimodular, and the
    diagonal of D nonnegative with d1 | d2 | ... .  Pivots are chosen by
    minimal absolute value.
    """
    assert M.ring == ZZ
    A = M.copy()
    n, m = A.nrows, A.ncols
    U = SparseMatrix.identity(ZZ, n)
    V = SparseMatrix.identity(ZZ, m)

    def swap_rows(i, k):
        A._swap_rows(i, k)
        U._swap_rows(i, k)

    def swap_cols(j, k):
        A._swap_cols(j, k)
        V._swap_cols(j, k)

    def addmul_row(dst, src, c):
        A._addmul_row(dst, src, c)
        U._addmul_row(dst, src, c)

    def addmul_col(dst, src, c):
        A._addmul_col(dst, src, c)
        V._addmul_col(dst, src, c)

    def negate_row(i):
        A._scale_row(i, -1)
        U._scale_row(i, -1)

    t = 0
    limit = min(n, m)
    while t < limit:
        # find minimal-absolute-value nonzero entry in the trailing block
        best = None
        for (i, j), v in A.entries.items():
            if i >= t and j >= t:
                if best is None or abs(v) < abs(best[2]):
                    best = (i, j, v)
        if best is None:
            break
        bi, bj, _ = best
        swap_rows(t, bi)
        swap_cols(t, bj)
        if A[t, t] < 0:
            negate_row(t)
        # clear the edging; pivot may shrink, so loop
        dirty = True
        while dirty:
            dirty = False
            piv = A[t, t]
            for i in range(t + 1, n):
                v = A[i, t]
                if v != 0:
                    q = v // piv
                    addmul_row(i, t, -q)
                    if A[i, t] != 0:  # remainder smaller than pivot
                        swap_rows(t, i)
                        if A[t, t] < 0:
                            negate_row(t)
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(t + 1, m):
                v = A[t, j]
                if v != 0:
                    q = v // piv
                    addmul_col(j, t, -q)
                    if A[t, j] != 0:
                        swap_cols(t, j)
                        dirty = True
                        break
        t += 1

    # enforce divisibility d1 | d2 | ...
    r = 0
    while r < limit and A[r, r] != 0:
        r += 1
    changed = True
    while changed:
        changed = False
        for i in range(r - 1):
            a, b = A[i, i], A[i + 1, i + 1]
            if b % a != 0:
                # standard 2x2 trick: bring gcd(a, b) to position i
                addmul_row(i, i + 1, 1)
                while True:
                    a0, b0 = A[i, i], A[i, i + 1]
                    if b0 != 0:
                        addmul_col(i + 1, i, -(b0 // a0))
                        if A[i, i + 1] != 0:
                            swap_cols(i, i + 1)
                            continue
                    a0, b0 = A[i, i], A[i + 1, i]
                    if b0 != 0:
                        addmul_row(i + 1, i, -(b0 // a0))
                        if A[i + 1, i] != 0:
                            swap_rows(i, i + 1)
                            continue
                    break
                if A[i, i] < 0:
                    negate_row(i)
                if A[i + 1, i + 1] < 0:
                    negate_row(i + 1)
                changed = True
    return A, U, V


def z_rank(M: SparseMatrix) -> int:
    D, _, _ = smith_normal_form(M)
    r = 0
    while r < min(M.nrows, M.ncols) and D[r, r] != 0:
        r += 1
    return r


def z_kernel_basis(M: SparseMatrix) -> SparseMatrix:
    """Columns form a Z-basis of the (saturated) kernel lattice of M."""
    D, _, V = smith_normal_form(M)
    r = 0
    while r < min(M.nrows, M.ncols) and D[r, r] != 0:
        r += 1
    K = SparseMatrix(ZZ, M.ncols, M.ncols - r)
    for idx, j in enumerate(range(r, M.ncols)):
        for i in range(M.ncols):
            K[i, idx] = V[i, j]
    return K


def z_solve(M: SparseMatrix, B: SparseMatrix):
    """Solve M X = B over Z (exact integral solutions); None if none exist."""
    D, U, V = smith_normal_form(M)
    r = 0
    while r < min(M.nrows, M.ncols) and D[r, r] != 0:
        r += 1
    UB = U @ B
    X = SparseMatrix(ZZ, M.ncols, B.ncols)
    Y = SparseMatrix(ZZ, M.ncols, B.ncols)
    for j in range(B.ncols):
        for i in range(M.nrows):
            v = UB[i, j]
            if i < r:
                if v % D[i, i] != 0:
                    return None
                Y[i, j] = v // D[i, i]
            elif v != 0:
                return None
    return V @ Y


def kernel_basis(M: SparseMatrix) -> SparseMatrix:
    return z_kernel_basis(M) if M.ring == ZZ else field_kernel_basis(M)


def rank(M: SparseMatrix) -> int:
    return z_rank(M) if M.ring == ZZ else field_rank(M)


def solve(M: SparseMatrix, B: SparseMatrix):
    return z_solve(M, B) if M.ring == ZZ else field_solve(M, B)


def invariant_factors(M: SparseMatrix):
    """Nonzero diagonal of the SNF over Z, in divisibility order."""
    D, _, _ = smith_normal_form(M)
    out = []
    for i in range(min(M.nrows, M.ncols)):
        if D[i, i] != 0:
            out.append(D[i, i])
    return out


def is_surjective_onto_cokernel_zero(M: SparseMatrix) -> bool:
    """True iff coker(M) = 0, i.e. M is surjective as a map of free modules."""
    if M.nrows == 0:
        return True
    if M.ring == ZZ:
        facs = invariant_factors(M)
        return len(facs) == M.nrows and all(f == 1 for f in facs)
    return field_rank(M) == M.nrows
