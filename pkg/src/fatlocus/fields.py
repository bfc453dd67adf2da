"""Exact scalar arithmetic: arbitrary-precision rationals and 64-bit prime fields.

Rank and determinant work runs over prime fields with p > 2^40 as a fast
surrogate for characteristic zero; a generic rank over Q equals the rank over
F_p unless p divides a relevant minor, so probabilistic verdicts are always
cross-checked over at least two distinct primes.  Rationals (``fractions.Fraction``)
remain available for small exact cross-checks.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from fractions import Fraction

from .errors import NoSuchRootError

#: Default modulus: the Mersenne prime 2^61 - 1 (primality asserted by tests).
DEFAULT_PRIME = (1 << 61) - 1

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47)


def is_probable_prime(n: int, rounds: int = 64) -> bool:
    """Miller-Rabin with ``rounds`` pseudo-random witnesses.

    Witnesses are derived deterministically from n so the function is pure.
    Error probability is at most 4^-rounds for composite n.
    """
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    h = hashlib.blake2b(n.to_bytes((n.bit_length() + 7) // 8, "little"))
    for i in range(rounds):
        hi = h.copy()
        hi.update(i.to_bytes(4, "little"))
        a = 2 + int.from_bytes(hi.digest(), "little") % (n - 3)
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def find_prime_with_unity(order: int, bits: int) -> int:
    """Smallest prime p >= 2^(bits-1) with p = 1 (mod order).

    Such a field contains a primitive order-th root of unity, which is how
    regular-polygon and Fermat-type coordinates are realized exactly.
    """
    if order < 1:
        raise ValueError("order must be positive")
    if not 40 <= bits <= 62:
        raise ValueError("bits must be in [40, 62]")
    lo = 1 << (bits - 1)
    # first candidate >= lo congruent to 1 mod order (any integer when order = 1)
    c = lo + (1 - lo) % order
    while True:
        if is_probable_prime(c):
            return c
        c += order


def next_prime_with_unity(order: int, above: int) -> int:
    """Smallest prime p > above with p = 1 (mod order)."""
    c = above + 1
    c += (1 - c) % order
    while True:
        if is_probable_prime(c):
            return c
        c += max(order, 1)


def _prime_factors(n: int) -> list[int]:
    out = []
    q = 2
    while q * q <= n:
        if n % q == 0:
            out.append(q)
            while n % q == 0:
                n //= q
        q += 1
    if n > 1:
        out.append(n)
    return out


def primitive_root_of_unity(p: int, order: int) -> int:
    """An element of F_p of multiplicative order exactly ``order``.

    Deterministic: tries bases 2, 3, 4, ... and returns the first
    x^((p-1)/order) whose order is not a proper divisor of ``order``.
    """
    if order == 1:
        return 1
    if (p - 1) % order != 0:
        raise NoSuchRootError(f"{order} does not divide {p} - 1")
    factors = _prime_factors(order)
    e = (p - 1) // order
    for x in range(2, p):
        z = pow(x, e, p)
        if z != 1 and all(pow(z, order // q, p) != 1 for q in factors):
            return z
    raise NoSuchRootError(f"no element of order {order} mod {p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    """Serializable field descriptor: rationals, or F_p with p prime > 2^40."""

    kind: str  # "Rational" | "Prime"
    p: int | None = None

    def __post_init__(self):
        if self.kind not in ("Rational", "Prime"):
            raise ValueError(f"unknown field kind {self.kind!r}")
        if self.kind == "Prime":
            if self.p is None or self.p.bit_length() < 41 or self.p.bit_length() > 63:
                raise ValueError("prime modulus must have 41..63 bits")
            if not is_probable_prime(self.p):
                raise ValueError(f"{self.p} is not prime")
        elif self.p is not None:
            raise ValueError("rational field takes no modulus")

    def field(self) -> "PrimeField | RationalField":
        return PrimeField(self.p) if self.kind == "Prime" else RationalField()

    def to_json(self) -> dict:
        d = {"kind": self.kind}
        if self.p is not None:
            d["p"] = str(self.p)
        return d

    @classmethod
    def from_json(cls, d: dict) -> "FieldSpec":
        return cls(kind=d["kind"], p=int(d["p"]) if "p" in d else None)


class PrimeField:
    """F_p arithmetic on plain int residues in [0, p).

    Elements are immutable ints; all methods are pure, so instances are safe
    for unrestricted concurrent use.
    """

    kind = "Prime"

    def __init__(self, p: int = DEFAULT_PRIME):
        self.spec = FieldSpec("Prime", p)
        self.p = p

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("PrimeField", self.p))

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def coerce(self, x) -> int:
        """Map an int, Fraction, or decimal string into [0, p)."""
        if isinstance(x, int):
            return x % self.p
        if isinstance(x, Fraction):
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        if isinstance(x, str):
            if "/" in x:
                num, den = x.split("/")
                return int(num) * pow(int(den), -1, self.p) % self.p
            return int(x) % self.p
        raise TypeError(f"cannot coerce {type(x).__name__} into F_p")

    def add(self, a, b):
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a, b):
        s = a - b
        return s + self.p if s < 0 else s

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return self.p - a if a else 0

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return a * self.inv(b) % self.p

    def pow(self, a, e):
        return pow(a, e, self.p)

    def is_zero(self, a) -> bool:
        return a == 0

    def root_of_unity(self, order: int) -> int:
        return primitive_root_of_unity(self.p, order)

    def to_str(self, a) -> str:
        return str(a)


class RationalField:
    """Exact rational arithmetic on ``fractions.Fraction`` values.

    Fraction keeps values in lowest terms with positive denominator, which is
    exactly the normal form the rest of the library relies on.
    """

    kind = "Rational"

    def __init__(self):
        self.spec = FieldSpec("Rational")

    def __repr__(self):
        return "RationalField()"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("RationalField")

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def coerce(self, x) -> Fraction:
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        if isinstance(x, str):
            return Fraction(x)
        raise TypeError(f"cannot coerce {type(x).__name__} into Q")

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return 1 / Fraction(a)

    def div(self, a, b):
        return Fraction(a) / b

    def pow(self, a, e):
        return Fraction(a) ** e

    def is_zero(self, a) -> bool:
        return a == 0

    def root_of_unity(self, order: int) -> Fraction:
        if order == 1:
            return Fraction(1)
        if order == 2:
            return Fraction(-1)
        raise NoSuchRootError(f"Q contains no primitive root of unity of order {order}")

    def to_str(self, a) -> str:
        return str(a)


class CounterRng:
    """Splittable counter-based generator (keyed BLAKE2b).

    Draw i of stream s is blake2b(key=seed, data=(s, i)); the sampled set is a
    pure function of (seed, stream, index), independent of call interleaving,
    which is what makes randomized verdicts reproducible under any scheduling.
    """

    def __init__(self, seed: int, stream: tuple = ()):
        self.seed = seed
        self.stream = stream
        self._key = hashlib.blake2b(
            repr(("fatlocus", seed, stream)).encode(), digest_size=32
        ).digest()
        self._counter = 0

    def split(self, *labels) -> "CounterRng":
        """Independent child stream; children never collide with the parent."""
        return CounterRng(self.seed, self.stream + tuple(labels))

    def _digest(self, index: int, salt: int) -> int:
        h = hashlib.blake2b(key=self._key, digest_size=16)
        h.update(index.to_bytes(8, "little"))
        h.update(salt.to_bytes(4, "little"))
        return int.from_bytes(h.digest(), "little")

    def draw_below(self, n: int, index: int | None = None) -> int:
        """Uniform value in [0, n) by rejection; indexed or sequential."""
        if index is None:
            index = self._counter
            self._counter += 1
        limit = (1 << 128) - (1 << 128) % n
        salt = 0
        while True:
            v = self._digest(index, salt)
            if v < limit:
                return v % n
            salt += 1

    def element(self, field: PrimeField, index: int | None = None) -> int:
        return self.draw_below(field.p, index)

    def affine_point(self, field: PrimeField, n_coords: int, index: int) -> tuple:
        """Deterministic random point of the chart, keyed by trial index."""
        sub = self.split("pt", index)
        return tuple(sub.draw_below(field.p, j) for j in range(n_coords))
