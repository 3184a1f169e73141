import pytest

from descentkit.algebra import DescentElement, descent_algebra
from descentkit.combinat import CHAR_ZERO, p_regular_partitions
from descentkit.fields import QQ, GF
from descentkit.morphisms import (
    delta_s,
    delta_idempotent_check,
    pullback_simple_check,
    subquiver_embedding_check,
    verify_bgr_homomorphism,
    verify_bgr_suite,
)


def _xi(n, field, comp):
    return DescentElement.xi(n, field, comp)


def test_delta_examples():
    f = QQ
    d1 = delta_s(_xi(3, f, (2, 1)), 1)
    assert d1 == _xi(2, f, (2,)) + _xi(2, f, (1, 1))
    d2 = delta_s(_xi(3, f, (2, 1)), 2)
    assert d2 == _xi(1, f, (1,))
    for n in range(2, 7):
        for s in range(1, n):
            assert delta_s(_xi(n, f, (n,)), s) == _xi(n - s, f, (n - s,))


def test_delta_drops_short_parts():
    f = GF(3)
    # only parts of size >= s contribute a term
    d = delta_s(_xi(4, f, (1, 2, 1)), 2)
    assert d == _xi(2, f, (1, 1))
    d3 = delta_s(_xi(4, f, (1, 2, 1)), 3)
    assert d3.is_zero()


def test_delta_s_equals_n_lands_in_trivial_algebra():
    f = QQ
    d = delta_s(_xi(4, f, (4,)), 4)
    assert d.n == 0 and not d.is_zero()
    assert delta_s(_xi(4, f, (2, 2)), 4).is_zero()


def test_delta_rejects_bad_shift():
    with pytest.raises(ValueError):
        delta_s(_xi(3, QQ, (3,)), 0)
    with pytest.raises(ValueError):
        delta_s(_xi(3, QQ, (3,)), 4)


def test_delta_is_linear():
    f = GF(5)
    x = _xi(4, f, (2, 1, 1)) + _xi(4, f, (4,)).scale(f.from_int(3))
    assert delta_s(x, 1) == delta_s(_xi(4, f, (2, 1, 1)), 1) + delta_s(
        _xi(4, f, (4,)), 1
    ).scale(f.from_int(3))


def test_bgr_homomorphism_small():
    for n in range(2, 6):
        for s in range(1, n):
            for field in (QQ, GF(2), GF(3)):
                r = verify_bgr_homomorphism(n, s, field)
                assert r["multiplicative"], (n, s, field.char)
                assert r["surjective"], (n, s, field.char)


def test_pullback_simple_identity():
    for n in range(2, 7):
        for p in (2, 3, 5, CHAR_ZERO):
            field = QQ if p == CHAR_ZERO else GF(p)
            for s in range(1, n):
                for mu in p_regular_partitions(n - s, p):
                    r = pullback_simple_check(mu, s, n, p)
                    assert r["ok"], (n, s, p, mu)


def test_idempotent_images_small():
    for n in range(2, 6):
        for s in range(1, n):
            for p in (2, 3, 5):
                r = delta_idempotent_check(n, s, p)
                assert r["ok"], (n, s, p)


def test_subquiver_embedding_small():
    for n in range(2, 7):
        for s in range(1, n):
            for p in (2, 3):
                r = subquiver_embedding_check(n, s, p)
                assert r["ok"], (n, s, p)
                assert not r["missing"]


def test_subquiver_embedding_vertex_map_n6_s1_p2():
    r = subquiver_embedding_check(6, 1, 2)
    assert r["vertex_map"] == {"32": "321", "41": "42", "5": "51"}


def test_suite_bundles_everything():
    r = verify_bgr_suite(5, 2, 3)
    assert r["ok"]
    kinds = {c["check"] for c in r["checks"]}
    assert kinds == {
        "homomorphism+surjectivity",
        "pullback-simple",
        "idempotent-images",
        "subquiver-embedding",
    }
    assert all(c["ok"] for c in r["checks"])


def test_composition_of_shifts_measured_not_assumed():
    # Report whether applying shifts s then t matches the single shift s+t;
    # this identity is not asserted in general, only measured.
    f = QQ
    results = []
    for n in range(3, 6):
        for s in range(1, n):
            for t in range(1, n - s + 1):
                alg = descent_algebra(n)
                agree = all(
                    delta_s(delta_s(_xi(n, f, q), s), t)
                    == delta_s(_xi(n, f, q), s + t)
                    for q in alg.comps
                )
                results.append(((n, s, t), agree))
    # at least record that the measurement ran over the intended grid
    assert len(results) == sum(
        1 for n in range(3, 6) for s in range(1, n) for t in range(1, n - s + 1)
    )
