"""Exact scalar arithmetic over Q and over prime fields.

Scalars are plain values: arbitrary-precision rationals (gmpy2.mpq) in
characteristic 0, and integers in [0, p) in characteristic p.  A
FieldSpec carries the characteristic and the coercions; everything else
works with the raw scalar values for speed.
"""

from gmpy2 import mpq, mpz


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


class FieldSpec:
    """Exact arithmetic context: the rationals, or F_p for a prime p."""

    __slots__ = ("char",)

    def __init__(self, char: int = 0):
        if char != 0 and not _is_prime(char):
            raise ValueError(f"characteristic must be 0 or prime, got {char}")
        self.char = char

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self.char == other.char

    def __hash__(self):
        return hash(("FieldSpec", self.char))

    def __repr__(self):
        return f"FieldSpec({self.char})"

    @property
    def zero(self):
        return 0 if self.char else mpq(0)

    @property
    def one(self):
        return 1 if self.char else mpq(1)

    def from_int(self, a: int):
        return a % self.char if self.char else mpq(a)

    def coerce(self, x):
        if self.char:
            if isinstance(x, int):
                return x % self.char
            q = mpq(x)
            num, den = int(q.numerator), int(q.denominator)
            return (num * pow(den, -1, self.char)) % self.char
        return mpq(x)

    def add(self, a, b):
        return (a + b) % self.char if self.char else a + b

    def sub(self, a, b):
        return (a - b) % self.char if self.char else a - b

    def mul(self, a, b):
        return (a * b) % self.char if self.char else a * b

    def neg(self, a):
        return (-a) % self.char if self.char else -a

    def inv(self, a):
        if self.char:
            if a % self.char == 0:
                raise ZeroDivisionError("inverse of 0")
            return pow(a, -1, self.char)
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return 1 / mpq(a)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return (a % self.char == 0) if self.char else a == 0

    # JSON-friendly exact string form ("3/4" over Q, "3" over F_p).
    def to_str(self, a) -> str:
        return str(a)

    def from_str(self, s: str):
        if self.char:
            return int(s) % self.char
        if "/" in s:
            num, den = s.split("/")
            return mpq(mpz(num), mpz(den))
        return mpq(mpz(s))


QQ = FieldSpec(0)


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


def field_p_label(field: FieldSpec):
    """The value used by p-dependent combinatorics: prime, or CHAR_ZERO."""
    from .combinat import CHAR_ZERO

    return field.char if field.char else CHAR_ZERO
