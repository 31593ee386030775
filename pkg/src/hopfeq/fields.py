"""Exact coefficient fields: the rationals and prime fields F_p.

Scalars are plain Python values (``fractions.Fraction`` over the rationals,
canonical ints in [0, p) over F_p); a Field object supplies the arithmetic.
Both representations are automatically kept in canonical form: Fraction
normalizes to lowest terms with positive denominator, and every F_p operation
reduces mod p.
"""

from __future__ import annotations

from fractions import Fraction


class FieldError(ValueError):
    """Malformed field descriptor or non-prime modulus."""


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(p: int) -> bool:
    # deterministic Miller-Rabin; the witness set is exact far beyond 2^31
    if p < 2:
        return False
    for q in _MR_WITNESSES:
        if p % q == 0:
            return p == q
    d, r = p - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, p)
        if x == 1 or x == p - 1:
            continue
        for _ in range(r - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class Field:
    """Common interface; use the Rationals/PrimeField subclasses."""

    characteristic: int
    descriptor: str

    def __eq__(self, other):
        return isinstance(other, Field) and self.descriptor == other.descriptor

    def __hash__(self):
        return hash(self.descriptor)

    def __repr__(self):
        return f"Field({self.descriptor!r})"

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def is_zero(self, a) -> bool:
        return a == self.zero

    def sum(self, values):
        acc = self.zero
        for v in values:
            acc = self.add(acc, v)
        return acc


class Rationals(Field):
    characteristic = 0
    descriptor = "q"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def from_int(self, k: int):
        return Fraction(k)

    def parse_scalar(self, text):
        # JSON carries rationals as "a/b" strings; bare ints are accepted too
        if isinstance(text, bool):
            raise FieldError(f"not a rational: {text!r}")
        if isinstance(text, int):
            return Fraction(text)
        try:
            return Fraction(str(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"not a rational: {text!r}") from exc

    def scalar_to_json(self, a):
        return str(a)

    def render(self, a) -> str:
        return str(a)

    def random(self, rng):
        return Fraction(rng.randint(-4, 4), rng.randint(1, 4))


class PrimeField(Field):
    def __init__(self, p: int):
        if not isinstance(p, int) or not is_prime(p):
            raise FieldError(f"modulus {p!r} is not prime")
        if p >= 2**31:
            raise FieldError(f"modulus {p} too large (need p < 2^31)")
        self.p = p
        self.characteristic = p
        self.descriptor = f"fp:{p}"
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.p - 2, self.p)

    def from_int(self, k: int):
        return k % self.p

    def parse_scalar(self, text):
        if isinstance(text, bool):
            raise FieldError(f"not an integer residue: {text!r}")
        if isinstance(text, int):
            return text % self.p
        try:
            return int(str(text), 10) % self.p
        except ValueError as exc:
            raise FieldError(f"not an integer residue: {text!r}") from exc

    def scalar_to_json(self, a):
        return a

    def render(self, a) -> str:
        return str(a)

    def random(self, rng):
        return rng.randrange(self.p)


QQ = Rationals()


def parse_field(spec: str) -> Field:
    """Parse a field descriptor: ``q`` for the rationals, ``fp:<p>`` for F_p."""
    if spec == "q":
        return QQ
    if spec.startswith("fp:"):
        body = spec[3:]
        if not body.isdigit():
            raise FieldError(f"malformed field descriptor {spec!r}")
        return PrimeField(int(body))
    raise FieldError(f"malformed field descriptor {spec!r}")
