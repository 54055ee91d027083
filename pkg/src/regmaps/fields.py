"""Prime-field and quadratic-extension arithmetic.

Everything the classification needs from number theory lives here: residue
arithmetic mod an odd prime p, the quadratic extension F_{p^2} realised as
a + b*delta with delta^2 a fixed non-residue, orders of 2x2 matrices, roots
of unity, and the two predicates s_set / is_admissible built on top of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import InternalInvariantError, UnsupportedExtensionError


def is_prime(n: int) -> bool:
    """Deterministic primality check for the small inputs this package sees."""
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def check_odd_prime(p: int) -> None:
    if p == 2 or not is_prime(p):
        raise ValueError(f"expected an odd prime, got {p}")


def p_part(m: int, p: int) -> int:
    """Largest power of p dividing m."""
    if m == 0:
        raise ValueError("p-part of 0 is undefined")
    out = 1
    while m % p == 0:
        m //= p
        out *= p
    return out


def p_prime_part(m: int, p: int) -> int:
    """Largest divisor of m coprime to p."""
    return m // p_part(m, p)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division; fine for the sizes used here."""
    if n <= 0:
        raise ValueError("factorize expects a positive integer")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


@dataclass(frozen=True, slots=True)
class FpElement:
    """Residue in [0, p) for an odd prime p."""

    value: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", self.value % self.p)

    def _check(self, other: "FpElement") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement(self.value + other.value, self.p)

    def __sub__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement(self.value - other.value, self.p)

    def __mul__(self, other: "FpElement") -> "FpElement":
        self._check(other)
        return FpElement(self.value * other.value, self.p)

    def __neg__(self) -> "FpElement":
        return FpElement(-self.value, self.p)

    def inverse(self) -> "FpElement":
        if self.value == 0:
            raise ZeroDivisionError("0 has no inverse")
        return FpElement(pow(self.value, self.p - 2, self.p), self.p)


def quadratic_residue(x: FpElement) -> bool:
    """True iff x is a square mod p (0 counts as a square)."""
    if x.value == 0:
        return True
    return pow(x.value, (x.p - 1) // 2, x.p) == 1


@lru_cache(maxsize=None)
def smallest_nonresidue(p: int) -> int:
    """Smallest positive quadratic non-residue mod p; the delta^2 of F_{p^2}."""
    check_odd_prime(p)
    for c in range(2, p):
        if pow(c, (p - 1) // 2, p) == p - 1:
            return c
    raise InternalInvariantError(f"no non-residue found mod {p}")


@dataclass(frozen=True, slots=True)
class Fp2Element:
    """Element a + b*delta of F_{p^2}, delta^2 = smallest non-residue mod p."""

    a: int
    b: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)

    @property
    def in_prime_field(self) -> bool:
        return self.b == 0

    def _check(self, other: "Fp2Element") -> None:
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")

    def __add__(self, other: "Fp2Element") -> "Fp2Element":
        self._check(other)
        return Fp2Element(self.a + other.a, self.b + other.b, self.p)

    def __sub__(self, other: "Fp2Element") -> "Fp2Element":
        self._check(other)
        return Fp2Element(self.a - other.a, self.b - other.b, self.p)

    def __neg__(self) -> "Fp2Element":
        return Fp2Element(-self.a, -self.b, self.p)

    def __mul__(self, other: "Fp2Element") -> "Fp2Element":
        self._check(other)
        nr = smallest_nonresidue(self.p)
        a = self.a * other.a + nr * self.b * other.b
        b = self.a * other.b + self.b * other.a
        return Fp2Element(a, b, self.p)

    def inverse(self) -> "Fp2Element":
        # norm = a^2 - nr*b^2 is the F_p-norm and vanishes only at 0
        nr = smallest_nonresidue(self.p)
        norm = (self.a * self.a - nr * self.b * self.b) % self.p
        if norm == 0:
            raise ZeroDivisionError("0 has no inverse")
        ninv = pow(norm, self.p - 2, self.p)
        return Fp2Element(self.a * ninv, -self.b * ninv, self.p)

    def __pow__(self, e: int) -> "Fp2Element":
        if e < 0:
            return self.inverse() ** (-e)
        out = Fp2Element(1, 0, self.p)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def is_one(self) -> bool:
        return self.a == 1 and self.b == 0


def one2(p: int) -> Fp2Element:
    return Fp2Element(1, 0, p)


@dataclass(frozen=True, slots=True)
class Gl2Matrix:
    """2x2 matrix over F_p, stored row-major; must be invertible."""

    a: int
    b: int
    c: int
    d: int
    p: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        object.__setattr__(self, "c", self.c % self.p)
        object.__setattr__(self, "d", self.d % self.p)
        if self.det() == 0:
            raise ValueError("singular matrix")

    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    def __mul__(self, other: "Gl2Matrix") -> "Gl2Matrix":
        if self.p != other.p:
            raise ValueError(f"mixed moduli {self.p} and {other.p}")
        p = self.p
        return Gl2Matrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            p,
        )

    def is_identity(self) -> bool:
        return self.a == 1 and self.b == 0 and self.c == 0 and self.d == 1


def identity_matrix(p: int) -> Gl2Matrix:
    return Gl2Matrix(1, 0, 0, 1, p)


def m_matrix(x: int, p: int) -> Gl2Matrix:
    """The trace-x matrix [[0, 1], [-1, x]] whose order drives s_set."""
    check_odd_prime(p)
    return Gl2Matrix(0, 1, -1, x, p)


def matrix_order(m: Gl2Matrix) -> int:
    """Smallest e >= 1 with m^e = identity, by repeated multiplication.

    Element orders in GL(2, p) are at most p(p^2 - 1); exceeding that cap
    means the arithmetic is broken, not that the input was bad.
    """
    p = m.p
    cap = p * (p * p - 1)
    acc = m
    e = 1
    while not acc.is_identity():
        acc = acc * m
        e += 1
        if e > cap:
            raise InternalInvariantError("matrix order exceeded p(p^2-1)")
    return e


@lru_cache(maxsize=None)
def _m_order(x: int, p: int) -> int:
    return matrix_order(m_matrix(x, p))


@dataclass(frozen=True, slots=True)
class SnpResult:
    """Residues x mod p whose matrix [[0,1],[-1,x]] has order dividing n but not n/2."""

    n: int
    p: int
    members: tuple[int, ...]


def s_set(n: int, p: int) -> SnpResult:
    """Compute the order-divisibility set for an even n and odd prime p."""
    if n < 2 or n % 2 != 0:
        raise ValueError(f"n must be a positive even integer, got {n}")
    check_odd_prime(p)
    half = n // 2
    members = tuple(
        x for x in range(p) if n % _m_order(x, p) == 0 and half % _m_order(x, p) != 0
    )
    return SnpResult(n, p, members)


@lru_cache(maxsize=None)
def _fp2_generator(p: int) -> Fp2Element:
    """First generator of the cyclic group F_{p^2}^* in (a, b) scan order."""
    check_odd_prime(p)
    n = p * p - 1
    prime_divs = tuple(factorize(n))
    for b in range(p):
        for a in range(p):
            if a == 0 and b == 0:
                continue
            g = Fp2Element(a, b, p)
            if all(not (g ** (n // q)).is_one() for q in prime_divs):
                return g
    raise InternalInvariantError(f"F_{p}^2 has no generator")


def root_of_unity(k: int, p: int) -> Fp2Element:
    """Element of multiplicative order exactly k in F_{p^2}.

    Only k dividing p^2 - 1 is supported; anything else raises rather than
    silently returning an element of the wrong order.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    check_odd_prime(p)
    n = p * p - 1
    if n % k != 0:
        raise UnsupportedExtensionError(
            f"order-{k} roots of unity do not exist in F_{p}^2 (k does not divide p^2-1)"
        )
    xi = _fp2_generator(p) ** (n // k)
    if not (xi ** k).is_one():
        raise InternalInvariantError("root of unity has wrong order")
    for q in factorize(k) if k > 1 else ():
        if (xi ** (k // q)).is_one():
            raise InternalInvariantError("root of unity has wrong order")
    return xi


def trace_term(m: int, p: int) -> Fp2Element:
    """xi + xi^-1 for a primitive 2*m_{p'}-th root of unity xi in F_{p^2}.

    The value depends on which primitive root the deterministic search finds
    and may fall outside the prime field; only its square feeds the
    admissibility test downstream.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    k = 2 * p_prime_part(m, p)
    xi = root_of_unity(k, p)
    return xi + xi.inverse()


def is_admissible(m: int, n: int, p: int) -> bool:
    """Whether 4 - t_m^2 - t_n^2 is the square of a prime-field element.

    Squares of F_p elements lie in F_p, so an expression with a nonzero
    delta-part is never admissible.
    """
    tm = trace_term(m, p)
    tn = trace_term(n, p)
    four = Fp2Element(4, 0, p)
    expr = four - tm * tm - tn * tn
    if not expr.in_prime_field:
        return False
    return quadratic_residue(FpElement(expr.a, p))
