"""The descent algebra of the symmetric group over an exact field.

The basis is indexed by compositions of n (ascending lexicographic).
Structure constants count contingency tables: the coefficient of the
basis element s in the product of r and q is the number of non-negative
integer matrices with row sums r, column sums q, whose row-by-row
concatenation with zeros deleted equals s.  They are computed once over
the integers per degree and reduced into each field.
"""

import json
from collections import defaultdict
from functools import lru_cache
from itertools import permutations

import numpy as np

from .combinat import compositions, is_p_regular, lambda_of, partitions
from .fields import FieldSpec, field_p_label
from .linalg import Matrix, echelon_int_rows, np_echelon_mod_p

MAX_DEGREE = 12  # ambient dimension 2^(n-1) <= 2048
_TENSOR_MAX_DEGREE = 8  # dense structure tensor only up to 128^3


class DescentAlgebra:
    """Degree-n descent algebra: basis bookkeeping and structure constants."""

    def __init__(self, n: int):
        if not 0 <= n <= MAX_DEGREE:
            raise ValueError(f"degree must be in [0, {MAX_DEGREE}]")
        self.n = n
        self.comps = compositions(n)
        self.dim = len(self.comps)
        self.index = {q: i for i, q in enumerate(self.comps)}
        self._rows = {}
        self._tensor = None

    # -- structure constants ------------------------------------------------

    def _build_row(self, ri: int):
        """All products Xi^r * Xi^q for fixed r, by one table enumeration.

        Enumerates the matrices with row sums r and positive column sums,
        column by column; the column-sum sequence is q and the zero-deleted
        row concatenation is s.
        """
        r = self.comps[ri]
        k = len(r)
        buckets = defaultdict(lambda: defaultdict(int))
        rem = list(r)
        cols = []
        rows = [[] for _ in range(k)]

        def leaf_or_next_column():
            if not any(rem):
                q = tuple(cols)
                s = tuple(x for row in rows for x in row)
                buckets[q][s] += 1
                return

            def choose(i, total):
                if i == k:
                    if total:
                        cols.append(total)
                        leaf_or_next_column()
                        cols.pop()
                    return
                choose(i + 1, total)
                row_i = rows[i]
                for v in range(1, rem[i] + 1):
                    rem[i] -= v
                    row_i.append(v)
                    choose(i + 1, total + v)
                    row_i.pop()
                    rem[i] += v

            choose(0, 0)

        leaf_or_next_column()
        idx = self.index
        table = {
            idx[q]: [(idx[s], c) for s, c in sbucket.items()]
            for q, sbucket in buckets.items()
        }
        self._rows[ri] = table
        return table

    def row_table(self, ri: int):
        table = self._rows.get(ri)
        return table if table is not None else self._build_row(ri)

    def structure_constants(self, r, q):
        """Map s -> |N^s_{r,q}| (zero counts omitted) as a dict on compositions."""
        if sum(r) != self.n or sum(q) != self.n:
            raise ValueError("degree mismatch")
        table = self.row_table(self.index[r])
        return {self.comps[si]: c for si, c in table.get(self.index[q], [])}

    def structure_tensor(self) -> np.ndarray:
        """Dense int64 tensor T[r, q, s] = |N^s_{r,q}| (degrees <= 8 only)."""
        if self._tensor is None:
            if self.n > _TENSOR_MAX_DEGREE:
                raise ValueError("structure tensor too large for this degree")
            d = self.dim
            T = np.zeros((d, d, d), dtype=np.int64)
            for ri in range(d):
                for qi, pairs in self.row_table(ri).items():
                    for si, c in pairs:
                        T[ri, qi, si] = c
            self._tensor = T
        return self._tensor

    # -- vector-level products ----------------------------------------------

    def mul_vec(self, x, y, field: FieldSpec):
        """Product of coefficient vectors, reduced into the field."""
        if field.char and self.n <= _TENSOR_MAX_DEGREE:
            T = self.structure_tensor()
            xv = np.array([int(a) % field.char for a in x], dtype=np.int64)
            yv = np.array([int(a) % field.char for a in y], dtype=np.int64)
            z = np.einsum("rqs,r,q->s", T, xv, yv) % field.char
            return [int(a) for a in z]
        acc = [field.zero] * self.dim
        for ri, xr in enumerate(x):
            if field.is_zero(xr):
                continue
            table = self.row_table(ri)
            for qi, yq in enumerate(y):
                if field.is_zero(yq):
                    continue
                c0 = field.mul(xr, yq)
                for si, c in table[qi]:
                    acc[si] = field.add(acc[si], field.mul(c0, field.from_int(c)))
        return acc

    def mul_vec_int(self, x, y):
        """Product of integer coefficient vectors over Z."""
        acc = [0] * self.dim
        for ri, xr in enumerate(x):
            if not xr:
                continue
            table = self.row_table(ri)
            for qi, yq in enumerate(y):
                if not yq:
                    continue
                c0 = xr * yq
                for si, c in table[qi]:
                    acc[si] += c0 * c
        return acc

    def left_mult_matrix(self, vec, p: int) -> np.ndarray:
        """Matrix of left multiplication by an integer vector, mod p."""
        T = self.structure_tensor()
        v = np.array([int(a) % p for a in vec], dtype=np.int64)
        return np.einsum("rqs,r->sq", T, v) % p

    def right_mult_matrix(self, vec, p: int) -> np.ndarray:
        """Matrix of right multiplication by an integer vector, mod p."""
        T = self.structure_tensor()
        v = np.array([int(a) % p for a in vec], dtype=np.int64)
        return np.einsum("rqs,q->sr", T, v) % p


@lru_cache(maxsize=None)
def descent_algebra(n: int) -> DescentAlgebra:
    return DescentAlgebra(n)


# ---------------------------------------------------------------------------
# elements


class DescentElement:
    """Sparse element of the degree-n descent algebra over a fixed field."""

    __slots__ = ("n", "field", "coeffs")

    def __init__(self, n: int, field: FieldSpec, coeffs=None):
        self.n = n
        self.field = field
        clean = {}
        for q, c in (coeffs or {}).items():
            if sum(q) != n:
                raise ValueError(f"composition {q} does not sum to {n}")
            c = field.coerce(c)
            if not field.is_zero(c):
                clean[q] = c
        self.coeffs = clean

    # construction helpers

    @classmethod
    def xi(cls, n, field, q):
        return cls(n, field, {tuple(q): 1})

    @classmethod
    def one(cls, n, field):
        return cls(n, field, {(n,) if n else (): 1})

    @classmethod
    def zero(cls, n, field):
        return cls(n, field)

    @classmethod
    def from_vector(cls, n, field, vec):
        alg = descent_algebra(n)
        return cls(n, field, {alg.comps[i]: c for i, c in enumerate(vec)})

    def to_vector(self):
        alg = descent_algebra(self.n)
        vec = [self.field.zero] * alg.dim
        for q, c in self.coeffs.items():
            vec[alg.index[q]] = c
        return vec

    # arithmetic

    def _check(self, other):
        if self.n != other.n:
            raise ValueError("degree mismatch")
        if self.field != other.field:
            raise ValueError("field mismatch")

    def __add__(self, other):
        self._check(other)
        f = self.field
        out = dict(self.coeffs)
        for q, c in other.coeffs.items():
            out[q] = f.add(out.get(q, f.zero), c)
        return DescentElement(self.n, f, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        f = self.field
        return DescentElement(self.n, f, {q: f.neg(c) for q, c in self.coeffs.items()})

    def scale(self, a):
        f = self.field
        a = f.coerce(a)
        return DescentElement(
            self.n, f, {q: f.mul(a, c) for q, c in self.coeffs.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, DescentElement):
            return self.scale(other)
        self._check(other)
        alg = descent_algebra(self.n)
        vec = alg.mul_vec(self.to_vector(), other.to_vector(), self.field)
        return DescentElement.from_vector(self.n, self.field, vec)

    def __rmul__(self, a):
        return self.scale(a)

    def __pow__(self, k: int):
        out = DescentElement.one(self.n, self.field)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        return (
            isinstance(other, DescentElement)
            and self.n == other.n
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def is_zero(self) -> bool:
        return not self.coeffs

    def __repr__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(
            f"{self.field.to_str(c)}*Xi{q}" for q, c in sorted(self.coeffs.items())
        )

    # serialization

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "field": {"char": self.field.char},
            "terms": [
                {"comp": list(q), "coeff": self.field.to_str(c)}
                for q, c in sorted(self.coeffs.items())
            ],
        }

    @classmethod
    def from_json(cls, data) -> "DescentElement":
        if isinstance(data, str):
            data = json.loads(data)
        field = FieldSpec(data["field"]["char"])
        coeffs = {
            tuple(t["comp"]): field.from_str(str(t["coeff"])) for t in data["terms"]
        }
        return cls(data["n"], field, coeffs)


def w_element(n: int, field: FieldSpec) -> DescentElement:
    """Xi^(n-1,1) - Xi^(1,n-1); generates the one-dimensional Rad^(n-2)."""
    if n < 3:
        raise ValueError("w element needs n >= 3")
    f = field
    return DescentElement(n, f, {(n - 1, 1): 1, (1, n - 1): -1})


# ---------------------------------------------------------------------------
# Young characters and the homomorphism onto class functions


@lru_cache(maxsize=None)
def young_character(q, mu) -> int:
    """Number of cosets of the Young subgroup of shape q fixed by cycle type mu.

    Counted as assignments of the cycles of mu (equal cycles at distinct
    indices count separately) to the blocks of q so that each block j
    receives cycles of total length q_j.
    """
    if sum(q) != sum(mu):
        raise ValueError("degree mismatch")
    values = tuple(sorted(set(mu)))
    start = tuple(mu.count(v) for v in values)
    from math import comb

    memo = {}

    def rec(avail, bi):
        if bi == len(q):
            return 1 if not any(avail) else 0
        key = (avail, bi)
        if key in memo:
            return memo[key]
        target = q[bi]
        total = 0

        def pick(i, rem, taken, mult):
            nonlocal total
            if rem == 0:
                full = taken + (0,) * (len(avail) - len(taken))
                total += mult * rec(tuple(a - t for a, t in zip(avail, full)), bi + 1)
                return
            if i == len(values):
                return
            v = values[i]
            for c in range(0, min(avail[i], rem // v) + 1):
                pick(i + 1, rem - c * v, taken + (c,), mult * comb(avail[i], c))

        pick(0, target, (), 1)
        memo[key] = total
        return total

    return rec(start, 0)


@lru_cache(maxsize=None)
def theta_matrix(n: int):
    """Integer matrix of Young character values, rows mu in P(n), cols q."""
    parts = partitions(n)
    comps = compositions(n)
    return tuple(
        tuple(young_character(q, mu) for q in comps) for mu in parts
    )


class ClassFunction:
    """Function on the partitions of n with values in a fixed field."""

    __slots__ = ("n", "field", "values")

    def __init__(self, n, field, values):
        expected = set(partitions(n))
        if set(values) != expected:
            raise ValueError("class function must be keyed by all partitions of n")
        self.n = n
        self.field = field
        self.values = {mu: field.coerce(c) for mu, c in values.items()}

    def __eq__(self, other):
        return (
            isinstance(other, ClassFunction)
            and self.n == other.n
            and self.field == other.field
            and self.values == other.values
        )

    def __mul__(self, other):
        return ClassFunction(
            self.n,
            self.field,
            {
                mu: self.field.mul(c, other.values[mu])
                for mu, c in self.values.items()
            },
        )

    def is_zero(self):
        return all(self.field.is_zero(c) for c in self.values.values())

    def __repr__(self):
        return f"ClassFunction({self.values})"


def theta(x: DescentElement) -> ClassFunction:
    """The basic-algebra surjection: Xi^q maps to the Young character of q."""
    n, f = x.n, x.field
    th = theta_matrix(n)
    comps = compositions(n)
    qidx = {q: i for i, q in enumerate(comps)}
    values = {}
    for mi, mu in enumerate(partitions(n)):
        acc = f.zero
        for q, c in x.coeffs.items():
            acc = f.add(acc, f.mul(c, f.from_int(th[mi][qidx[q]])))
        values[mu] = acc
    return ClassFunction(n, f, values)


def char_function(n: int, field: FieldSpec, lam) -> ClassFunction:
    """Indicator class function of the p-equivalence class of lam."""
    from .combinat import p_equivalent

    p = field_p_label(field)
    return ClassFunction(
        n,
        field,
        {mu: 1 if p_equivalent(lam, mu, p) else 0 for mu in partitions(n)},
    )


# ---------------------------------------------------------------------------
# radical


def radical_pairs(n: int, p):
    """Basis description of the radical: (q, rep) pairs and bare compositions.

    Returns a list of entries: ("diff", q, rep) for Xi^q - Xi^rep with rep
    the lexicographically smallest rearrangement of q, and ("single", rep)
    for Xi^rep when the underlying partition is not p-regular.
    """
    classes = defaultdict(list)
    for q in compositions(n):
        classes[lambda_of(q)].append(q)
    out = []
    for lam in sorted(classes):
        members = sorted(classes[lam])
        rep = members[0]
        if not is_p_regular(lam, p):
            out.append(("single", rep))
        for q in members[1:]:
            out.append(("diff", q, rep))
    return out


def radical_basis(n: int, field: FieldSpec):
    """A basis of the Jacobson radical, of size 2^(n-1) - #(p-regular classes)."""
    out = []
    for entry in radical_pairs(n, field_p_label(field)):
        if entry[0] == "single":
            out.append(DescentElement.xi(n, field, entry[1]))
        else:
            _, q, rep = entry
            out.append(DescentElement(n, field, {q: 1, rep: -1}))
    return out


def radical_int_vectors(n: int, p):
    """The same radical basis as integer coefficient vectors."""
    alg = descent_algebra(n)
    out = []
    for entry in radical_pairs(n, p):
        vec = [0] * alg.dim
        if entry[0] == "single":
            vec[alg.index[entry[1]]] = 1
        else:
            _, q, rep = entry
            vec[alg.index[q]] = 1
            vec[alg.index[rep]] = -1
        out.append(vec)
    return out


def radical_power_dims(n: int, field: FieldSpec):
    """Dimensions of Rad^1, Rad^2, ... down to the first zero power."""
    alg = descent_algebra(n)
    p = field.char
    gens = radical_int_vectors(n, field_p_label(field))
    dims = []
    if p and n <= _TENSOR_MAX_DEGREE:
        lmats = [alg.left_mult_matrix(g, p) for g in gens]
        basis = np_echelon_mod_p(np.array(gens, dtype=np.int64), p) if gens else np.zeros((0, alg.dim), dtype=np.int64)
        dims.append(basis.shape[0])
        while dims[-1]:
            prods = [(L @ basis.T).T % p for L in lmats]
            stacked = np.vstack(prods) if prods else np.zeros((0, alg.dim), dtype=np.int64)
            basis = np_echelon_mod_p(stacked, p)
            dims.append(basis.shape[0])
    else:
        if p:
            # small degrees over F_p without the tensor: exact loop products
            def reduce_rows(rows):
                return np_echelon_mod_p(np.array(rows, dtype=np.int64), p) if rows else np.zeros((0, alg.dim), dtype=np.int64)

            basis = reduce_rows(gens)
            dims.append(basis.shape[0])
            while dims[-1]:
                rows = []
                for g in gens:
                    for b in basis:
                        rows.append(alg.mul_vec_int(g, [int(x) for x in b]))
                basis = reduce_rows(rows)
                dims.append(basis.shape[0])
        else:
            basis = echelon_int_rows(gens, alg.dim)
            dims.append(len(basis))
            while dims[-1]:
                seen = set()
                rows = []
                for g in gens:
                    for b in basis:
                        v = tuple(alg.mul_vec_int(g, b))
                        if any(v) and v not in seen:
                            seen.add(v)
                            rows.append(v)
                basis = echelon_int_rows(rows, alg.dim)
                dims.append(len(basis))
    return dims


def radical_subspace_vectors(n: int, field: FieldSpec, power: int = 1):
    """Echelon basis vectors (integer lists) of Rad^power over the field."""
    alg = descent_algebra(n)
    gens = radical_int_vectors(n, field_p_label(field))
    p = field.char
    if p:
        basis = np_echelon_mod_p(np.array(gens, dtype=np.int64).reshape(-1, alg.dim), p)
        for _ in range(power - 1):
            if basis.shape[0] == 0:
                break
            if n <= _TENSOR_MAX_DEGREE:
                lmats = [alg.left_mult_matrix(g, p) for g in gens]
                prods = [(L @ basis.T).T % p for L in lmats]
                basis = np_echelon_mod_p(np.vstack(prods), p)
            else:
                rows = [alg.mul_vec_int(g, [int(x) for x in b]) for g in gens for b in basis]
                basis = np_echelon_mod_p(np.array(rows, dtype=np.int64), p)
        return [[int(x) for x in row] for row in basis]
    basis = echelon_int_rows(gens, alg.dim)
    for _ in range(power - 1):
        if not basis:
            break
        seen = set()
        rows = []
        for g in gens:
            for b in basis:
                v = tuple(alg.mul_vec_int(g, b))
                if any(v) and v not in seen:
                    seen.add(v)
                    rows.append(v)
        basis = echelon_int_rows(rows, alg.dim)
    return basis


def nilpotency_index(n: int, field: FieldSpec) -> int:
    """Least m with Rad^m = 0."""
    dims = radical_power_dims(n, field)
    return len(dims)


# ---------------------------------------------------------------------------
# regular representation and the group-algebra oracle


def regular_representation(n: int, field: FieldSpec):
    """Left-multiplication matrix of every basis element, as a dict on compositions."""
    alg = descent_algebra(n)
    out = {}
    for q in alg.comps:
        qi = alg.index[q]
        table = alg.row_table(qi)
        cols = [[0] * alg.dim for _ in range(alg.dim)]
        for ri in range(alg.dim):
            for si, c in table[ri]:
                cols[ri][si] = c
        entries = [[cols[ri][si] for ri in range(alg.dim)] for si in range(alg.dim)]
        out[q] = Matrix(entries, field)
    return out


def element_matrix(x: DescentElement) -> Matrix:
    """Left-multiplication matrix of an arbitrary element."""
    alg = descent_algebra(x.n)
    f = x.field
    entries = [[f.zero] * alg.dim for _ in range(alg.dim)]
    for q, c in x.coeffs.items():
        table = alg.row_table(alg.index[q])
        for ri in range(alg.dim):
            for si, cc in table[ri]:
                entries[si][ri] = f.add(entries[si][ri], f.mul(c, f.from_int(cc)))
    return Matrix(entries, f)


ORACLE_MAX_DEGREE = 6


def _descent_set(w) -> frozenset:
    return frozenset(i for i in range(len(w) - 1) if w[i] > w[i + 1])


def _boundary_set(q) -> frozenset:
    acc, out = 0, []
    for part in q[:-1]:
        acc += part
        out.append(acc - 1)
    return frozenset(out)


@lru_cache(maxsize=None)
def minimal_coset_reps(n: int, q):
    """Minimal-length coset representatives of the Young subgroup of shape q.

    These are the permutations (one-line, 0-based) that are increasing
    within each block of q; the convention is calibrated against the
    contingency-table structure constants (left-to-right composition).
    """
    bounds = _boundary_set(q)
    return tuple(
        w for w in permutations(range(n)) if _descent_set(w) <= bounds
    )


def oracle_product(r, q):
    """Xi^r * Xi^q computed literally in the group algebra of S_n.

    Returns the coefficients on the Xi basis as a dict composition -> int.
    Only supported for n <= 6.
    """
    n = sum(r)
    if sum(q) != n:
        raise ValueError("degree mismatch")
    if n > ORACLE_MAX_DEGREE:
        raise ValueError(f"group-algebra oracle limited to n <= {ORACLE_MAX_DEGREE}")
    prod = defaultdict(int)
    reps_q = minimal_coset_reps(n, q)
    for a in minimal_coset_reps(n, r):
        for b in reps_q:
            # composition read left to right: (ab)(i) = b(a(i))
            prod[tuple(b[a[i]] for i in range(n))] += 1
    # The product lies in the descent algebra, so its coefficient on a
    # permutation depends only on the descent set; peel off Xi^s terms
    # from the finest descent sets upward.
    coeff_by_set = {}
    for w, c in prod.items():
        coeff_by_set.setdefault(_descent_set(w), c)
    comps = sorted(compositions(n), key=lambda s: len(_boundary_set(s)), reverse=True)
    out = {}
    for s in comps:
        ds = _boundary_set(s)
        c = coeff_by_set.get(ds, 0)
        c -= sum(out[t] for t in out if ds < _boundary_set(t))
        if c:
            out[s] = c
    return out


def group_algebra_oracle(n: int):
    """Full multiplication table from the group algebra (n <= 6)."""
    if n > ORACLE_MAX_DEGREE:
        raise ValueError(f"group-algebra oracle limited to n <= {ORACLE_MAX_DEGREE}")
    return {
        (r, q): oracle_product(r, q)
        for r in compositions(n)
        for q in compositions(n)
    }
