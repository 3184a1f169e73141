"""Compositions, partitions and the p-equivalence combinatorics.

Compositions and partitions are plain tuples of positive integers.  A
composition of n is any tuple summing to n; a partition is weakly
decreasing.  Characteristic zero is represented by the sentinel
``CHAR_ZERO`` rather than by 0, so that it can never leak into modular
arithmetic by accident.
"""

from functools import lru_cache

# Sentinel for characteristic-zero ("p = infinity") behaviour of the
# p-dependent combinatorial maps.
CHAR_ZERO = "char0"


def is_composition(q) -> bool:
    return isinstance(q, tuple) and all(isinstance(a, int) and a >= 1 for a in q)


def is_partition(q) -> bool:
    return is_composition(q) and all(q[i] >= q[i + 1] for i in range(len(q) - 1))


def check_composition(q, n=None):
    if not is_composition(q):
        raise ValueError(f"not a composition: {q!r}")
    if n is not None and sum(q) != n:
        raise ValueError(f"composition {q!r} does not sum to {n}")


@lru_cache(maxsize=None)
def compositions(n):
    """All compositions of n in ascending lexicographic order.

    There are 2^(n-1) of them for n >= 1, and exactly one (the empty
    tuple) for n = 0.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        return ((),)
    out = []

    def rec(rem, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for a in range(1, rem + 1):
            acc.append(a)
            rec(rem - a, acc)
            acc.pop()

    rec(n, [])
    out.sort()
    return tuple(out)


@lru_cache(maxsize=None)
def partitions(n):
    """All partitions of n in ascending lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    out = []

    def rec(rem, maxpart, acc):
        if rem == 0:
            out.append(tuple(acc))
            return
        for a in range(min(rem, maxpart), 0, -1):
            acc.append(a)
            rec(rem - a, a, acc)
            acc.pop()

    rec(n, n, [])
    out.sort()
    return tuple(out)


def is_p_regular(lam, p) -> bool:
    """True if no part of lam occurs p or more times (always true at char 0)."""
    if p is CHAR_ZERO or p == CHAR_ZERO:
        return True
    return all(lam.count(a) <= p - 1 for a in set(lam))


@lru_cache(maxsize=None)
def p_regular_partitions(n, p):
    """The p-regular partitions of n, ascending lexicographic."""
    return tuple(lam for lam in partitions(n) if is_p_regular(lam, p))


def lambda_of(q):
    """The partition obtained by sorting the parts of q decreasingly."""
    return tuple(sorted(q, reverse=True))


def refines(r, q) -> bool:
    """True if consecutive blocks of r sum to q_1, ..., q_k in order."""
    if sum(r) != sum(q):
        raise ValueError("compositions of different degree")
    i = 0
    for target in q:
        acc = 0
        while acc < target:
            if i >= len(r):
                return False
            acc += r[i]
            i += 1
        if acc != target:
            return False
    return i == len(r)


def weakly_refines(r, q) -> bool:
    """True if some rearrangement of r refines q.

    Equivalent to: the multiset of parts of r splits into sub-multisets
    summing to q_1, ..., q_k.  Decided by backtracking over the blocks.
    """
    if sum(r) != sum(q):
        raise ValueError("compositions of different degree")
    parts = sorted(r, reverse=True)

    def rec(avail, blocks):
        if not blocks:
            return not avail
        target = blocks[0]

        def pick(start, rem, taken):
            if rem == 0:
                rest = avail[:]
                for t in taken:
                    rest.remove(t)
                return rec(rest, blocks[1:])
            prev = None
            for i in range(start, len(avail)):
                a = avail[i]
                if a == prev or a > rem:
                    continue
                prev = a
                if pick(i + 1, rem - a, taken + [a]):
                    return True
            return False

        return pick(0, target, [])

    return rec(parts, sorted(q, reverse=True))


def p_prime_type(lam, p):
    """Canonical invariant of the p-equivalence class of lam.

    Each part m = p^a * m' with p not dividing m' contributes p^a copies
    of m'; the result is sorted decreasingly.  This is the cycle type of
    the p'-part of a permutation of cycle type lam.
    """
    out = []
    for m in lam:
        a = 1
        while m % p == 0:
            m //= p
            a *= p
        out.extend([m] * a)
    return tuple(sorted(out, reverse=True))


def p_equivalent(lam, mu, p) -> bool:
    """Whether lam and mu have conjugate p'-parts (equality at char 0)."""
    if sum(lam) != sum(mu):
        raise ValueError("partitions of different degree")
    if p is CHAR_ZERO or p == CHAR_ZERO:
        return lam == mu
    return p_prime_type(lam, p) == p_prime_type(mu, p)


def p_regularize(lam, p):
    """The unique p-regular partition p-equivalent to lam.

    Repeatedly replaces p equal parts m by a single part p*m.
    """
    if p is CHAR_ZERO or p == CHAR_ZERO:
        return tuple(lam)
    parts = list(lam)
    while True:
        for m in sorted(set(parts)):
            if parts.count(m) >= p:
                for _ in range(p):
                    parts.remove(m)
                parts.append(p * m)
                break
        else:
            return tuple(sorted(parts, reverse=True))


def concat_sharp(mu, s, p):
    """The p-regular partition p-equivalent to mu with an extra part s."""
    if s < 1:
        raise ValueError("s must be positive")
    return p_regularize(lambda_of(mu + (s,)), p)
