"""Decomposition matrices, Cartan matrices, and the C~ = D^T C D identity.

Cartan entries are corner dimensions dim e_mu * A * e_lam.  Over F_p these
are ranks of products of multiplication matrices mod p.  Over Q the ranks
are computed modulo a large prime and certified exact by the identity
sum over all pairs of dim e_mu * A * e_lam = dim A (each modular rank is a
lower bound for the rational rank, so equality of the totals forces
equality entrywise); on certificate failure another prime is tried.
"""

from functools import lru_cache

import gmpy2
import numpy as np

from .algebra import descent_algebra, radical_power_dims, radical_subspace_vectors
from .combinat import p_equivalent, p_regular_partitions, partitions
from .fields import QQ, FieldSpec, GF, _is_prime
from .idempotents import orthogonal_idempotent_set, simple_labels
from .linalg import np_rank_mod_p


def _integer_vector(e):
    """Coefficient vector of an element cleared to integers (a positive scale)."""
    vec = e.to_vector()
    if e.field.char:
        return [int(c) for c in vec]
    den = 1
    for c in vec:
        den = gmpy2.lcm(den, c.denominator)
    return [int(c * den) for c in vec]


@lru_cache(maxsize=None)
def _certification_primes():
    """A few primes just under 2^26 (products stay inside int64 matmuls)."""
    out = []
    k = 2**26 - 1
    while len(out) < 8:
        if _is_prime(k):
            out.append(k)
        k -= 2
    return tuple(out)


def _corner_ranks(n, field, power, prime):
    """Ranks mod `prime` of all corner maps x -> e_mu x e_lam on Rad^power."""
    alg = descent_algebra(n)
    idems = orthogonal_idempotent_set(n, field)
    labels = sorted(idems.labels)
    vecs = {lam: _integer_vector(idems[lam]) for lam in labels}
    lmats = {lam: alg.left_mult_matrix(vecs[lam], prime) for lam in labels}
    rmats = {lam: alg.right_mult_matrix(vecs[lam], prime) for lam in labels}
    if power:
        basis = radical_subspace_vectors(n, field, power)
        B = np.array(basis, dtype=np.int64).reshape(len(basis), alg.dim) % prime
    else:
        B = None
    ranks = {}
    for mu in labels:
        for lam in labels:
            M = (lmats[mu] @ rmats[lam]) % prime
            if B is not None:
                M = (M @ B.T) % prime
            ranks[(lam, mu)] = np_rank_mod_p(M, prime)
    return ranks


def corner_dims(n: int, field: FieldSpec, power: int = 0):
    """dim e_mu * Rad^power * e_lam for all label pairs (power 0: whole algebra).

    Returns a dict keyed by (lam, mu).
    """
    if field.char:
        return _corner_ranks(n, field, power, field.char)
    if power == 0:
        expected = 2 ** (n - 1)
    else:
        dims = radical_power_dims(n, field)
        expected = dims[power - 1] if power - 1 < len(dims) else 0
    for prime in _certification_primes():
        ranks = _corner_ranks(n, field, power, prime)
        if sum(ranks.values()) == expected:
            return ranks
    raise ArithmeticError("corner dimensions failed certification at every prime")


def decomposition_matrix(n: int, p: int):
    """0/1 matrix, rows all partitions of n, columns p-regular ones, both ascending."""
    rows = sorted(partitions(n))
    cols = sorted(p_regular_partitions(n, p))
    return [[1 if p_equivalent(lam, mu, p) else 0 for mu in cols] for lam in rows]


def cartan_matrix(n: int, field: FieldSpec):
    """Entry at (lam, mu) = dim e_mu * D_n * e_lam, labels ascending lex."""
    labels = sorted(simple_labels(n, field))
    dims = corner_dims(n, field, 0)
    return [[dims[(lam, mu)] for mu in labels] for lam in labels]


class CartanData:
    """Decomposition and Cartan matrices of degree n at the prime p."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        self.row_order = sorted(partitions(n))
        self.col_order = sorted(p_regular_partitions(n, p))
        self.D = decomposition_matrix(n, p)
        self.C = cartan_matrix(n, QQ)
        self.C_tilde = cartan_matrix(n, GF(p))

    def to_json(self):
        return {
            "n": self.n,
            "p": self.p,
            "row_order": [list(t) for t in self.row_order],
            "col_order": [list(t) for t in self.col_order],
            "D": self.D,
            "C": self.C,
            "C_tilde": self.C_tilde,
        }


def _matmul_int(A, B):
    return [
        [sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A
    ]


def verify_apw(n: int, p: int) -> dict:
    """Check C~ = D^T C D with both sides computed independently."""
    data = CartanData(n, p)
    Dt = [list(col) for col in zip(*data.D)]
    predicted = _matmul_int(_matmul_int(Dt, data.C), data.D)
    mismatches = [
        (i, j, predicted[i][j], data.C_tilde[i][j])
        for i in range(len(predicted))
        for j in range(len(predicted))
        if predicted[i][j] != data.C_tilde[i][j]
    ]
    return {
        "n": n,
        "p": p,
        "ok": not mismatches,
        "C": data.C,
        "D": data.D,
        "C_tilde": data.C_tilde,
        "DtCD": predicted,
        "mismatches": mismatches,
    }
