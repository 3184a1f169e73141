"""The degree-lowering surjections Delta_s and their verification suites.

Delta_s sends Xi^q to the sum of Xi^{q^{(i)}} over the positions i with
q_i >= s, where q^{(i)} subtracts s from part i (deleting it if it hits 0).
It is a surjective algebra homomorphism onto the descent algebra of degree
n - s; the pullback of the simple labelled mu is the simple labelled
mu^{#s} (the regular representative of the class of mu with a part s
appended).  All checks here report witnesses instead of raising.
"""

from collections import defaultdict

from .algebra import DescentElement, descent_algebra, theta, young_character
from .combinat import (
    CHAR_ZERO,
    concat_sharp,
    compositions,
    p_regular_partitions,
)
from .fields import FieldSpec, field_p_label
from .idempotents import IdempotentSet, orthogonal_idempotent_set
from .linalg import span


def _delta_comp(q, s):
    """The compositions q^{(i)} for positions with q_i >= s, with multiplicity."""
    out = []
    for i, part in enumerate(q):
        if part >= s:
            reduced = q[:i] + ((part - s,) if part > s else ()) + q[i + 1 :]
            out.append(reduced)
    return out


def delta_s(x: DescentElement, s: int) -> DescentElement:
    """Apply Delta_s, landing in degree n - s."""
    n = x.n
    if not 1 <= s <= n:
        raise ValueError(f"s must satisfy 1 <= s <= {n}")
    f = x.field
    coeffs = defaultdict(lambda: f.zero)
    for q, c in x.coeffs.items():
        for reduced in _delta_comp(q, s):
            coeffs[reduced] = f.add(coeffs[reduced], c)
    return DescentElement(n - s, f, dict(coeffs))


def verify_bgr_homomorphism(n: int, s: int, field: FieldSpec) -> dict:
    """Check multiplicativity on every basis pair, plus surjectivity."""
    f = field
    comps = compositions(n)
    failures = []
    images = {q: delta_s(DescentElement.xi(n, f, q), s) for q in comps}
    for r in comps:
        xr = DescentElement.xi(n, f, r)
        for q in comps:
            lhs = delta_s(xr * DescentElement.xi(n, f, q), s)
            rhs = images[r] * images[q]
            if lhs != rhs:
                failures.append({"r": list(r), "q": list(q)})
    target_dim = 2 ** (n - s - 1) if n - s >= 1 else 1
    rank = span(
        [img.to_vector() for img in images.values()],
        descent_algebra(n - s).dim,
        f,
    ).dim
    return {
        "n": n,
        "s": s,
        "char": f.char,
        "multiplicative": not failures,
        "failures": failures,
        "image_rank": rank,
        "target_dim": target_dim,
        "surjective": rank == target_dim,
        "ok": not failures and rank == target_dim,
    }


def pullback_simple_check(mu, s: int, n: int, p) -> dict:
    """Eigenvalue identity for the pullback of the simple labelled mu.

    For every composition q of n the eigenvalue of Xi^q on the pulled-back
    simple, sum over q_i >= s of phi^{q^{(i)}}(mu), must equal
    phi^q(mu^{#s}) in the field.
    """
    mu = tuple(mu)
    if sum(mu) != n - s:
        raise ValueError("mu must be a partition of n - s")
    if mu not in p_regular_partitions(n - s, p):
        raise ValueError(f"{mu} does not label a simple module at p={p}")
    sharp = concat_sharp(mu, s, p)
    modulus = None if p == CHAR_ZERO else p
    witnesses = []
    for q in compositions(n):
        lhs = sum(young_character(reduced, mu) for reduced in _delta_comp(q, s))
        rhs = young_character(q, sharp)
        same = lhs == rhs if modulus is None else (lhs - rhs) % modulus == 0
        if not same:
            witnesses.append({"q": list(q), "lhs": lhs, "rhs": rhs})
    return {
        "n": n,
        "s": s,
        "p": p,
        "mu": list(mu),
        "mu_sharp": list(sharp),
        "ok": not witnesses,
        "witnesses": witnesses,
    }


def delta_idempotent_check(n: int, s: int, p) -> dict:
    """Images of a complete idempotent set under Delta_s.

    The labels mu^{#s} over mu in the regular labels of degree n - s form
    the surviving set Upsilon; e_lam must map to 0 for lam outside Upsilon,
    and the surviving images must form a complete orthogonal idempotent set
    of degree n - s with theta-image the indicator of the class of mu.
    """
    field = FieldSpec(0 if p == CHAR_ZERO else p)
    idems = orthogonal_idempotent_set(n, field)
    small_labels = sorted(p_regular_partitions(n - s, p))
    sharp_of = {mu: concat_sharp(mu, s, p) for mu in small_labels}
    upsilon = set(sharp_of.values())
    problems = []
    if len(upsilon) != len(small_labels):
        problems.append("label map mu -> mu^{#s} is not injective")
    for lam in idems.labels:
        img = delta_s(idems[lam], s)
        if lam not in upsilon and not img.is_zero():
            problems.append(f"Delta_s(e_{lam}) != 0 for {lam} outside Upsilon")
    images = {mu: delta_s(idems[sharp_of[mu]], s) for mu in small_labels}
    surviving = IdempotentSet(n - s, field, images)
    report = surviving.verify()
    if not report["all"]:
        problems.append({"surviving_set_invariants": report})
    return {
        "n": n,
        "s": s,
        "p": p,
        "upsilon": [list(t) for t in sorted(upsilon)],
        "ok": not problems,
        "problems": problems,
    }


def subquiver_embedding_check(n: int, s: int, p) -> dict:
    """Every arrow mu -> nu of the small quiver appears on mu^{#s} -> nu^{#s}."""
    from .fields import GF, QQ
    from .quiver import ext_quiver

    field = QQ if p == CHAR_ZERO else GF(p)
    small = ext_quiver(n - s, field)
    big = ext_quiver(n, field)
    vertex_map = {v: concat_sharp(v, s, p) for v in small.vertices}
    missing = []
    for i, mu in enumerate(small.vertices):
        for j, nu in enumerate(small.vertices):
            m = small.arrows[i][j]
            if m and big.arrow_multiplicity(vertex_map[mu], vertex_map[nu]) < m:
                missing.append({"mu": list(mu), "nu": list(nu), "multiplicity": m})
    return {
        "n": n,
        "s": s,
        "p": p,
        "vertex_map": {
            "".join(map(str, k)): "".join(map(str, v)) for k, v in vertex_map.items()
        },
        "ok": not missing,
        "missing": missing,
    }


def verify_bgr_suite(n: int, s: int, p) -> dict:
    """The full report bundle for one (n, s, p)."""
    field = FieldSpec(0 if p == CHAR_ZERO else p)
    checks = [
        {"check": "homomorphism+surjectivity", **verify_bgr_homomorphism(n, s, field)}
    ]
    for mu in sorted(p_regular_partitions(n - s, p)):
        checks.append({"check": "pullback-simple", **pullback_simple_check(mu, s, n, p)})
    checks.append({"check": "idempotent-images", **delta_idempotent_check(n, s, p)})
    if n - s >= 1 and n <= 8:
        checks.append({"check": "subquiver-embedding", **subquiver_embedding_check(n, s, p)})
    return {
        "n": n,
        "s": s,
        "p": p,
        "ok": all(c["ok"] for c in checks),
        "checks": checks,
    }
