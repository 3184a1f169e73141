"""Regression fixtures: reference matrices, quivers, idempotent identities,
the local corner-algebra presentation, and the loop-count table, stored as
JSON data files and replayed against fresh computations.
"""

import json
from importlib import resources
from itertools import combinations

from .algebra import DescentElement, theta, char_function, descent_algebra
from .cartan import cartan_matrix, decomposition_matrix
from .fields import QQ, GF, FieldSpec
from .idempotents import IdempotentSet, corner_algebra, orthogonal_idempotent_set
from .linalg import span
from .quiver import ext_quiver

DEFAULT_SEED = 20240801


def load_fixture(name: str):
    path = resources.files("descentkit") / "data" / f"{name}.json"
    return json.loads(path.read_text())


def _field_of(p) -> FieldSpec:
    return QQ if p == "char0" else GF(p)


def _element(n, field, terms) -> DescentElement:
    return DescentElement(n, field, {tuple(t): 1 for t in terms})


# -- corner-algebra presentation search --------------------------------------


def _realizes_corner_table(e, u, v) -> bool:
    """Do e, u, v satisfy the reference local-algebra presentation?

    Required: {e, u, v, u^2, uv} is a basis of the corner, vu = 0,
    v^2 = u^2, and every product involving u^2 or uv vanishes.
    """
    u2, uv = u * u, u * v
    if u2.is_zero() or uv.is_zero():
        return False
    if not (v * u).is_zero() or not (v * v == u2):
        return False
    for z in (u2, uv):
        for x in (u, v, u2, uv):
            if not (z * x).is_zero() or not (x * z).is_zero():
                return False
    vecs = [y.to_vector() for y in (e, u, v, u2, uv)]
    return span(vecs, descent_algebra(e.n).dim, e.field).dim == 5


def corner_presentation_search(n: int = 4, p: int = 2):
    """Search the radical of the local corner for generators u, v realizing
    the reference multiplication table; returns (e, u, v) or None."""
    field = GF(p)
    e = orthogonal_idempotent_set(n, field)[(n,)]
    basis, _ = corner_algebra(e)
    if len(basis) != 5:
        return None
    radical = [x for x in basis if theta(x).is_zero()]
    candidates = []
    size = len(radical)
    for mask in range(1, 1 << size):
        coeffs = [(mask >> i) & 1 for i in range(size)]
        x = DescentElement.zero(n, field)
        for c, b in zip(coeffs, radical):
            if c:
                x = x + b
        candidates.append(x)
    for u in candidates:
        for v in candidates:
            if u != v and _realizes_corner_table(e, u, v):
                return e, u, v
    return None


# -- individual fixture checks ------------------------------------------------


def _check_cartan(fx):
    field = _field_of(fx["p"])
    if fx["kind"] == "decomposition":
        got = decomposition_matrix(fx["n"], fx["p"])
    else:
        got = cartan_matrix(fx["n"], field)
    ok = got == fx["matrix"]
    return ok, {} if ok else {"expected": fx["matrix"], "got": got}


def _check_quiver(fx):
    Q = ext_quiver(fx["n"], _field_of(fx["p"]))
    expected_vertices = [tuple(v) for v in fx["vertices"]]
    ok = Q.vertices == expected_vertices and Q.arrows == fx["arrows"]
    return ok, {} if ok else {
        "expected": {"vertices": fx["vertices"], "arrows": fx["arrows"]},
        "got": Q.to_json(),
    }


def _check_idempotent(fx):
    field = GF(fx["p"])
    n = fx["n"]
    if "members" in fx:
        members = {
            tuple(int(c) for c in key): _element(n, field, terms)
            for key, terms in fx["members"].items()
        }
        report = IdempotentSet(n, field, members).verify()
        return report["all"], {} if report["all"] else report
    e = _element(n, field, fx["element"])
    lam = tuple(fx["lambda"])
    ok = e * e == e and theta(e) == char_function(n, field, lam)
    return ok, {}


def _check_corner(fx):
    field = GF(fx["p"])
    n = fx["n"]
    e = _element(n, field, fx["idempotent"])
    basis, _ = corner_algebra(e)
    if len(basis) != fx["expected_dim"]:
        return False, {"expected_dim": fx["expected_dim"], "got": len(basis)}
    u = _element(n, field, fx["u"])
    v = _element(n, field, fx["v"])
    if not _realizes_corner_table(e, u, v):
        return False, {"reason": "reference generators fail the table"}
    if corner_presentation_search(n, fx["p"]) is None:
        return False, {"reason": "no generators found in the computed corner"}
    return True, {}


def _check_loops(fx, n_max):
    p = fx["p"]
    bound = min(n_max, fx["n_max"])
    problems = []
    seen = {}
    for n in range(1, bound + 1):
        Q = ext_quiver(n, GF(p))
        for i, lam in enumerate(Q.vertices):
            name = "".join(map(str, lam))
            seen[name] = Q.arrows[i][i]
            if all(part % p for part in lam) and Q.arrows[i][i]:
                problems.append({"lambda": name, "unexpected_loops": Q.arrows[i][i]})
    for name, count in fx["values"].items():
        if sum(int(c) for c in name) <= bound and seen.get(name) != count:
            problems.append({"lambda": name, "expected": count, "got": seen.get(name)})
    return not problems, {"problems": problems} if problems else {}


def _check_random_associativity(seed, n=7, trials=5):
    import random

    rng = random.Random(seed)
    comps = descent_algebra(n).comps
    problems = []
    for field in (GF(2), QQ):
        for _ in range(trials):
            xs = [
                DescentElement(
                    n, field, {q: rng.randrange(-2, 3) for q in rng.sample(comps, 8)}
                )
                for _ in range(3)
            ]
            x, y, z = xs
            if (x * y) * z != x * (y * z):
                problems.append({"char": field.char})
    return not problems, {"problems": problems} if problems else {}


def run_fixtures(only=None, n_max: int = 8, seed: int = DEFAULT_SEED):
    """Run every stored fixture; returns a list of result records, in a
    deterministic order.  `only` filters by group name prefix."""
    jobs = []
    for fx in load_fixture("cartan"):
        jobs.append(("cartan", fx["id"], lambda fx=fx: _check_cartan(fx)))
    for fx in load_fixture("quivers"):
        jobs.append(("quiver", fx["id"], lambda fx=fx: _check_quiver(fx)))
    for fx in load_fixture("idempotents"):
        jobs.append(("idempotent", fx["id"], lambda fx=fx: _check_idempotent(fx)))
    corner = load_fixture("corner")
    jobs.append(("corner", corner["id"], lambda: _check_corner(corner)))
    loops = load_fixture("loops")
    jobs.append(("loops", loops["id"], lambda: _check_loops(loops, n_max)))
    jobs.append(
        ("random", "associativity_n7", lambda: _check_random_associativity(seed))
    )
    results = []
    for group, name, job in jobs:
        if only and not group.startswith(only):
            continue
        ok, detail = job()
        results.append({"group": group, "name": name, "ok": ok, "detail": detail})
    return results
