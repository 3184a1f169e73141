"""Exact dense linear algebra over Q and F_p.

The generic routines work on lists of scalar values through a FieldSpec
and are exact by construction.  For the modular hot paths (corner
dimensions of 128-dimensional algebras) there are numpy int64 helpers;
entries stay far below 2^63 since they are reduced mod p throughout.
"""

import numpy as np

from .fields import FieldSpec


# ---------------------------------------------------------------------------
# generic exact routines


def echelonize(rows, field: FieldSpec):
    """Reduced row echelon form of a list of row vectors.

    Returns (rows, pivot_cols); zero rows are dropped, pivots are 1 and
    are the only nonzero entries in their column, so the output is a
    canonical basis of the row space.
    """
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    out = []
    pivots = []
    for row in rows:
        for prow, pc in zip(out, pivots):
            c = row[pc]
            if not field.is_zero(c):
                row = [field.sub(a, field.mul(c, b)) for a, b in zip(row, prow)]
        pc = next((j for j in range(ncols) if not field.is_zero(row[j])), None)
        if pc is None:
            continue
        inv = field.inv(row[pc])
        row = [field.mul(inv, a) for a in row]
        for i, (prow, qc) in enumerate(zip(out, pivots)):
            c = prow[pc]
            if not field.is_zero(c):
                out[i] = [field.sub(a, field.mul(c, b)) for a, b in zip(prow, row)]
        k = next((i for i, q in enumerate(pivots) if q > pc), len(pivots))
        out.insert(k, row)
        pivots.insert(k, pc)
    return out, pivots


class Matrix:
    """Dense exact matrix over a fixed field."""

    __slots__ = ("rows", "cols", "entries", "field")

    def __init__(self, entries, field: FieldSpec):
        self.entries = [[field.coerce(x) for x in row] for row in entries]
        self.rows = len(self.entries)
        self.cols = len(self.entries[0]) if self.entries else 0
        if any(len(r) != self.cols for r in self.entries):
            raise ValueError("ragged matrix")
        self.field = field

    @classmethod
    def identity(cls, n, field):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.entries == other.entries
        )

    def __matmul__(self, other):
        if self.field != other.field:
            raise ValueError("field mismatch")
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        f = self.field
        bt = list(zip(*other.entries))
        out = [
            [f.coerce(sum(a * b for a, b in zip(row, col))) for col in bt]
            for row in self.entries
        ]
        return Matrix(out, f)

    def to_json(self):
        return [[self.field.to_str(x) for x in row] for row in self.entries]


def rref(M: Matrix) -> Matrix:
    rows, _ = echelonize(M.entries, M.field)
    rows += [[M.field.zero] * M.cols for _ in range(M.rows - len(rows))]
    return Matrix(rows, M.field)


def rank(M: Matrix) -> int:
    rows, _ = echelonize(M.entries, M.field)
    return len(rows)


def kernel_basis(M: Matrix) -> "Subspace":
    """Canonical basis of the right kernel of M."""
    f = M.field
    rows, pivots = echelonize(M.entries, f)
    free = [j for j in range(M.cols) if j not in pivots]
    basis = []
    for j in free:
        v = [f.zero] * M.cols
        v[j] = f.one
        for prow, pc in zip(rows, pivots):
            v[pc] = f.neg(prow[j])
        basis.append(v)
    return Subspace(M.cols, f, basis)


def solve(M: Matrix, b):
    """One solution of M x = b, or None if the system is inconsistent."""
    f = M.field
    b = [f.coerce(x) for x in b]
    if len(b) != M.rows:
        raise ValueError("dimension mismatch")
    aug = [row + [bv] for row, bv in zip(M.entries, b)]
    rows, pivots = echelonize(aug, f)
    x = [f.zero] * M.cols
    for prow, pc in zip(rows, pivots):
        if pc == M.cols:
            return None
        x[pc] = prow[-1]
    return x


class Subspace:
    """Subspace of F^d held as a canonical reduced-echelon basis."""

    __slots__ = ("ambient_dim", "field", "basis", "pivots")

    def __init__(self, ambient_dim, field, vectors=()):
        self.ambient_dim = ambient_dim
        self.field = field
        vecs = [[field.coerce(x) for x in v] for v in vectors]
        for v in vecs:
            if len(v) != ambient_dim:
                raise ValueError("vector of wrong length")
        self.basis, self.pivots = echelonize(vecs, field)

    @property
    def dim(self):
        return len(self.basis)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient_dim == other.ambient_dim
            and self.field == other.field
            and self.basis == other.basis
        )

    def reduce(self, v):
        """The normal form of v modulo this subspace."""
        f = self.field
        v = [f.coerce(x) for x in v]
        for row, pc in zip(self.basis, self.pivots):
            c = v[pc]
            if not f.is_zero(c):
                v = [f.sub(a, f.mul(c, b)) for a, b in zip(v, row)]
        return v

    def member(self, v) -> bool:
        f = self.field
        return all(f.is_zero(x) for x in self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        return all(self.member(v) for v in other.basis)

    def sum(self, other: "Subspace") -> "Subspace":
        if self.ambient_dim != other.ambient_dim or self.field != other.field:
            raise ValueError("ambient mismatch")
        return Subspace(self.ambient_dim, self.field, self.basis + other.basis)

    def intersection(self, other: "Subspace") -> "Subspace":
        """Zassenhaus: row-reduce [U U; V 0] and read the (0, W) block."""
        f = self.field
        d = self.ambient_dim
        rows = [u + u for u in self.basis] + [v + [f.zero] * d for v in other.basis]
        red, pivots = echelonize(rows, f)
        out = [row[d:] for row, pc in zip(red, pivots) if pc >= d]
        return Subspace(d, f, out)


def span(vectors, ambient_dim, field) -> Subspace:
    return Subspace(ambient_dim, field, vectors)


def quotient_dim(U: Subspace, V: Subspace) -> int:
    """dim U - dim V, after checking V is contained in U."""
    if not U.contains(V):
        raise ValueError("V is not a subspace of U")
    return U.dim - V.dim


# ---------------------------------------------------------------------------
# fast integer-row echelon (characteristic 0)


def echelon_int_rows(rows_iter, width):
    """Incremental echelon over Q of integer vectors, fraction-free.

    Keeps each pivot row as a primitive integer vector; returns the list
    of echelon rows (not reduced above pivots).  Exact: the row space
    over Q is preserved.
    """
    from math import gcd

    pivots = {}  # col -> integer row (list)
    for v in rows_iter:
        v = list(v)
        for c in range(width):
            a = v[c]
            if a == 0:
                continue
            prow = pivots.get(c)
            if prow is None:
                g = 0
                for x in v:
                    g = gcd(g, x)
                pivots[c] = [x // g for x in v]
                break
            b = prow[c]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            v = [fa * x - fb * y for x, y in zip(v, prow)]
    return [pivots[c] for c in sorted(pivots)]


# ---------------------------------------------------------------------------
# numpy mod-p helpers


def np_echelon_mod_p(A: np.ndarray, p: int) -> np.ndarray:
    """Row echelon form mod p of an int64 array; returns the nonzero rows."""
    A = np.array(A, dtype=np.int64) % p
    nr, nc = A.shape
    r = 0
    for c in range(nc):
        if r == nr:
            break
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        i = r + nz[0]
        if i != r:
            A[[r, i]] = A[[i, r]]
        inv = pow(int(A[r, c]), -1, p)
        A[r] = (A[r] * inv) % p
        rest = np.nonzero(A[:, c])[0]
        rest = rest[rest != r]
        if rest.size:
            A[rest] = (A[rest] - np.outer(A[rest, c], A[r])) % p
        r += 1
    return A[:r]


def np_rank_mod_p(A: np.ndarray, p: int) -> int:
    return np_echelon_mod_p(A, p).shape[0]
