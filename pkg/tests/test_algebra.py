import json
import random
import threading
from itertools import permutations

import pytest

from descentkit.algebra import (
    DescentAlgebra,
    DescentElement,
    descent_algebra,
    group_algebra_oracle,
    minimal_coset_reps,
    nilpotency_index,
    oracle_product,
    radical_basis,
    radical_power_dims,
    regular_representation,
    theta,
    w_element,
    young_character,
)
from descentkit.combinat import (
    CHAR_ZERO,
    compositions,
    p_regular_partitions,
    partitions,
    weakly_refines,
)
from descentkit.fields import QQ, GF
from descentkit.linalg import span

FIELDS = [QQ, GF(2), GF(3), GF(5)]


def test_dimension():
    for n in range(1, 11):
        assert descent_algebra(n).dim == 2 ** (n - 1)


def test_identity_element():
    for n in (1, 3, 5):
        for f in (QQ, GF(3)):
            one = DescentElement.one(n, f)
            x = DescentElement(n, f, {q: 2 for q in compositions(n)})
            assert one * x == x and x * one == x


def test_structure_constants_match_oracle_small():
    for n in range(1, 5):
        alg = descent_algebra(n)
        for r in compositions(n):
            for q in compositions(n):
                assert alg.structure_constants(r, q) == oracle_product(r, q)


def test_oracle_full_table_n4():
    table = group_algebra_oracle(4)
    alg = descent_algebra(4)
    for (r, q), prod in table.items():
        assert prod == alg.structure_constants(r, q)


def test_oracle_rejects_large_degree():
    with pytest.raises(ValueError):
        oracle_product((7,), (7,))


def test_associativity_basis_triples_small():
    for n in range(1, 5):
        f = GF(7)
        xs = [DescentElement.xi(n, f, q) for q in compositions(n)]
        for a in xs:
            for b in xs:
                ab = a * b
                for c in xs:
                    assert (ab) * c == a * (b * c)


@pytest.mark.parametrize("n", [6, 7])
def test_associativity_random_triples(n):
    rng = random.Random(71 + n)
    comps = compositions(n)
    for f in (QQ, GF(2)):
        for _ in range(5):
            x, y, z = (
                DescentElement(
                    n, f, {q: rng.randrange(-2, 3) for q in rng.sample(comps, 6)}
                )
                for _ in range(3)
            )
            assert (x * y) * z == x * (y * z)


def _literal_young_character(q, mu):
    """Count cosets of the Young subgroup of shape q fixed by a permutation
    of cycle type mu, literally in S_n."""
    n = sum(q)
    # a permutation of cycle type mu on consecutive points, one-line 0-based
    sigma = list(range(n))
    start = 0
    for part in mu:
        for i in range(part):
            sigma[start + i] = start + (i + 1) % part
        start += part
    sigma = tuple(sigma)
    mult = lambda a, b: tuple(b[a[i]] for i in range(n))
    # the Young subgroup: permutations preserving the consecutive blocks
    blocks = []
    start = 0
    for part in q:
        blocks.append(range(start, start + part))
        start += part
    subgroup = [
        w
        for w in permutations(range(n))
        if all(all(w[i] in b for i in b) for b in blocks)
    ]
    fixed = 0
    for w in minimal_coset_reps(n, q):
        coset = frozenset(mult(h, w) for h in subgroup)
        if frozenset(mult(x, sigma) for x in coset) == coset:
            fixed += 1
    return fixed


def test_young_character_against_literal_count():
    for n in range(1, 6):
        for q in compositions(n):
            for mu in partitions(n):
                assert young_character(q, mu) == _literal_young_character(q, mu)


def test_theta_homomorphism_basis_pairs():
    for n in range(1, 7):
        for f in (QQ, GF(2)):
            xs = [DescentElement.xi(n, f, q) for q in compositions(n)]
            for a in xs:
                ta = theta(a)
                for b in xs:
                    assert theta(a * b) == ta * theta(b)


def test_radical_is_kernel_of_theta():
    for n in range(1, 7):
        for f in FIELDS:
            basis = radical_basis(n, f)
            p = f.char if f.char else CHAR_ZERO
            expected = 2 ** (n - 1) - len(p_regular_partitions(n, p))
            assert len(basis) == expected
            assert all(theta(x).is_zero() for x in basis)
            # linear independence
            vecs = [x.to_vector() for x in basis]
            assert span(vecs, descent_algebra(n).dim, f).dim == expected


def test_radical_closure_under_products():
    # products of two radical elements lie in the span of Rad^2
    from descentkit.algebra import radical_subspace_vectors

    for n in (3, 4, 5):
        for f in (QQ, GF(2), GF(3)):
            basis = radical_basis(n, f)
            rad2 = span(
                [[f.from_int(c) for c in v] for v in radical_subspace_vectors(n, f, 2)],
                descent_algebra(n).dim,
                f,
            )
            for x in basis:
                for y in basis:
                    assert rad2.member((x * y).to_vector())


def test_radical_example_n3_p2():
    f = GF(2)
    basis = radical_basis(3, f)
    expected = {
        frozenset({((1, 1, 1), 1)}),
        frozenset({((2, 1), 1), ((1, 2), 1)}),
    }
    got = {frozenset((q, int(c)) for q, c in x.coeffs.items()) for x in basis}
    assert got == expected


def test_nilpotency_small_cases():
    assert nilpotency_index(3, GF(2)) == 2
    assert radical_power_dims(3, GF(2)) == [2, 0]
    for f in FIELDS:
        assert nilpotency_index(6, f) == 5
    # semisimple cases
    assert nilpotency_index(1, QQ) == 1
    assert nilpotency_index(2, GF(3)) == 1
    assert nilpotency_index(2, GF(2)) == 2


def test_w_element():
    f = QQ
    assert w_element(3, f).coeffs == {(2, 1): f.coerce(1), (1, 2): f.coerce(-1)}
    with pytest.raises(ValueError):
        w_element(2, f)
    assert (w_element(5, GF(5)) ** 4).is_zero()
    assert not (w_element(6, GF(5)) ** 4).is_zero()


def test_young_character_support_and_regular_nonvanishing():
    # phi^q(mu) != 0 implies mu weakly refines q; and phi^mu(mu) != 0 mod p
    # for p-regular mu
    for n in range(1, 9):
        for mu in partitions(n):
            for q in compositions(n):
                if young_character(q, mu):
                    assert weakly_refines(mu, q)
        for p in (2, 3, 5, 7):
            for mu in p_regular_partitions(n, p):
                assert young_character(mu, mu) % p != 0


def test_simple_label_is_weak_refinement_minimal():
    # among mu with phi^mu(lam) != 0 in the field, lam is minimal
    for n in range(1, 9):
        for p in (2, 3, 5, 7):
            for lam in p_regular_partitions(n, p):
                assert young_character(lam, lam) % p != 0
                for mu in partitions(n):
                    if mu != lam and young_character(mu, lam) % p != 0:
                        assert not weakly_refines(mu, lam)


def test_regular_representation_consistency():
    n = 4
    for f in (QQ, GF(2)):
        mats = regular_representation(n, f)
        for q, M in mats.items():
            x = DescentElement.xi(n, f, q)
            for r in compositions(n):
                prod = x * DescentElement.xi(n, f, r)
                col = [M.entries[i][descent_algebra(n).index[r]] for i in range(2 ** (n - 1))]
                assert col == prod.to_vector()


def test_element_json_round_trip():
    x = DescentElement(6, GF(5), {(2, 1, 2, 1): 3, (6,): 4})
    assert DescentElement.from_json(json.dumps(x.to_json())) == x
    y = DescentElement(4, QQ, {(2, 2): QQ.from_str("3/4")})
    assert DescentElement.from_json(y.to_json()) == y


def test_element_validation():
    with pytest.raises(ValueError):
        DescentElement(3, QQ, {(2, 2): 1})
    with pytest.raises(ValueError):
        DescentElement.xi(3, QQ, (2, 1)) * DescentElement.xi(4, QQ, (4,))
    with pytest.raises(ValueError):
        DescentElement.xi(3, QQ, (2, 1)) * DescentElement.xi(3, GF(2), (2, 1))


def test_structure_table_concurrent_access():
    alg = DescentAlgebra(6)
    results = [None] * 8

    def work(i):
        results[i] = alg.structure_constants((2, 2, 2), (3, 2, 1))

    threads = [threading.Thread(target=work, args=(i,)) for i in range(8)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(r == results[0] for r in results)
    assert results[0] == oracle_product((2, 2, 2), (3, 2, 1))
