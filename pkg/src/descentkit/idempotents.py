"""Complete sets of primitive orthogonal idempotents of the descent algebra.

For each regular-partition label we solve for a preimage of the indicator
class function under the surjection onto class functions, lift it to an
exact idempotent through the nilpotent radical by Newton iteration
(e <- 3e^2 - 2e^3), and orthogonalize sequentially in ascending
lexicographic order.  The set is not canonical; downstream quantities
(Cartan entries, Ext dimensions) do not depend on the choice.
"""

from functools import lru_cache
from math import ceil, log2

from .algebra import (
    DescentElement,
    char_function,
    descent_algebra,
    theta,
    theta_matrix,
)
from .combinat import p_regular_partitions, partitions
from .fields import FieldSpec, field_p_label
from .linalg import Matrix, echelonize, solve


def simple_labels(n: int, field: FieldSpec):
    """Labels of the simple modules: p-regular partitions (all, in char 0)."""
    return p_regular_partitions(n, field_p_label(field))


def semisimple_preimage(lam, n: int, field: FieldSpec) -> DescentElement:
    """Any x with theta(x) = the indicator class function of the class of lam."""
    lam = tuple(lam)
    if lam not in simple_labels(n, field):
        raise ValueError(f"{lam} does not label a simple module here")
    f = field
    th = theta_matrix(n)
    parts = partitions(n)
    entries = [[f.from_int(v) for v in row] for row in th]
    target = char_function(n, f, lam)
    b = [target.values[mu] for mu in parts]
    x = solve(Matrix(entries, f), b)
    if x is None:
        raise ArithmeticError("class-function system unexpectedly inconsistent")
    return DescentElement.from_vector(n, f, x)


def lift_idempotent(x: DescentElement) -> DescentElement:
    """Lift x with x^2 = x modulo the radical to an exact idempotent.

    Newton iteration e <- 3e^2 - 2e^3 squares the error each step; the
    radical is nilpotent of index < n, so ceil(log2(n)) + 1 steps suffice.
    """
    bound = ceil(log2(max(x.n, 2))) + 1
    e = x
    for _ in range(bound + 1):
        e2 = e * e
        if e2 == e:
            return e
        e = e2.scale(3) - (e2 * e).scale(2)
    raise ArithmeticError("idempotent lifting did not converge: x^2 - x not in the radical?")


class IdempotentSet:
    """A complete set of primitive orthogonal idempotents, keyed by label."""

    def __init__(self, n: int, field: FieldSpec, members: dict):
        self.n = n
        self.field = field
        self.members = dict(members)
        self.labels = sorted(members)

    def __getitem__(self, lam):
        return self.members[tuple(lam)]

    def __iter__(self):
        return iter(self.labels)

    def __len__(self):
        return len(self.members)

    def verify(self) -> dict:
        """Check the defining invariants literally; returns a report dict."""
        n, f = self.n, self.field
        report = {}
        es = self.members
        report["idempotent"] = all(e * e == e for e in es.values())
        report["orthogonal"] = all(
            (es[a] * es[b]).is_zero()
            for a in es
            for b in es
            if a != b
        )
        total = DescentElement.zero(n, f)
        for e in es.values():
            total = total + e
        report["complete"] = total == DescentElement.one(n, f)
        report["theta_images"] = all(
            theta(es[lam]) == char_function(n, f, lam) for lam in es
        )
        report["all"] = all(report.values())
        return report

    def to_json(self):
        return {
            "n": self.n,
            "field": {"char": self.field.char},
            "members": {
                "".join(map(str, lam)) if lam else "0": self.members[lam].to_json()
                for lam in self.labels
            },
        }


def build_idempotent_set(n: int, field: FieldSpec, order=None) -> IdempotentSet:
    """Construct a fresh set, orthogonalizing in the given label order."""
    lams = list(order) if order is not None else sorted(simple_labels(n, field))
    if sorted(lams) != sorted(simple_labels(n, field)):
        raise ValueError("order must enumerate all simple labels")
    one = DescentElement.one(n, field)
    members = {}
    f_sum = DescentElement.zero(n, field)
    for lam in lams[:-1]:
        x = semisimple_preimage(lam, n, field)
        g = one - f_sum
        e = lift_idempotent(g * x * g)
        members[lam] = e
        f_sum = f_sum + e
    members[lams[-1]] = one - f_sum
    return IdempotentSet(n, field, members)


@lru_cache(maxsize=None)
def _cached_set(n: int, char: int) -> IdempotentSet:
    return build_idempotent_set(n, FieldSpec(char))


def orthogonal_idempotent_set(n: int, field: FieldSpec) -> IdempotentSet:
    """The cached complete set of primitive orthogonal idempotents."""
    return _cached_set(n, field.char)


def corner_algebra(e: DescentElement):
    """Basis and multiplication table of the corner algebra e * D_n * e.

    Returns (basis, table): basis is a list of DescentElements whose
    coefficient vectors are in reduced echelon form, and table[i][j] is the
    coefficient list of basis[i] * basis[j] in that basis.
    """
    if not (e * e == e):
        raise ValueError("corner_algebra requires an idempotent")
    n, f = e.n, e.field
    alg = descent_algebra(n)
    rows = []
    for q in alg.comps:
        x = e * DescentElement.xi(n, f, q) * e
        rows.append(x.to_vector())
    basis_rows, pivots = echelonize(rows, f)
    basis = [DescentElement.from_vector(n, f, row) for row in basis_rows]
    table = []
    for x in basis:
        row = []
        for y in basis:
            vec = list((x * y).to_vector())
            coeffs = []
            for row_b, c in zip(basis_rows, pivots):
                a = vec[c]
                coeffs.append(a)
                if not f.is_zero(a):
                    for j, v in enumerate(row_b):
                        vec[j] = f.sub(vec[j], f.mul(a, v))
            if any(not f.is_zero(v) for v in vec):
                raise ArithmeticError("corner product left the corner subspace")
            row.append(coeffs)
        table.append(row)
    return basis, table
