"""Arithmetic in a prime field F_p for odd p > 3.

Field elements are plain Python ints in canonical form (0 <= x < p); the
modulus lives in a shared ``PrimeField`` context rather than on each value.
The context keeps an operation counter so callers can measure arithmetic
cost instead of wall time.
"""

from __future__ import annotations

from .errors import PreconditionError

_SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for n < 3.3 * 10^24."""
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
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41):
        if a % n == 0:
            continue
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


class PrimeField:
    """Context object for F_p arithmetic.

    All methods take and return canonical residues. ``op_count`` counts
    basic field operations (+, -, *, /, inversion) at unit cost each;
    bulk/vectorized code paths account for their work via ``tick``.
    """

    __slots__ = ("p", "op_count", "_sqrt_nonresidue")

    def __init__(self, p: int):
        if p <= 3 or p % 2 == 0:
            raise PreconditionError(f"modulus must be an odd prime > 3, got {p}")
        if not is_prime(p):
            raise PreconditionError(f"modulus {p} is not prime")
        self.p = p
        self.op_count = 0
        self._sqrt_nonresidue = 0

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    # -- counting ------------------------------------------------------

    def tick(self, n: int = 1) -> None:
        """Charge n field operations (used by bulk code paths)."""
        self.op_count += n

    def reset_op_count(self) -> int:
        """Zero the operation counter, returning the previous value."""
        old = self.op_count
        self.op_count = 0
        return old

    # -- arithmetic ----------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self.op_count += 1
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        self.op_count += 1
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        self.op_count += 1
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        self.op_count += 1
        return a * b % self.p

    def inv(self, a: int) -> int:
        """Multiplicative inverse. Raises on zero input."""
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        self.op_count += 1
        return pow(a, self.p - 2, self.p)

    def div(self, a: int, b: int) -> int:
        if b % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        self.op_count += 1
        return a * pow(b, self.p - 2, self.p) % self.p

    def pow(self, a: int, e: int) -> int:
        """a**e by square-and-multiply; 0**0 == 1 by convention."""
        if e < 0:
            raise PreconditionError("exponent must be nonnegative")
        # cost model: one op per squaring/multiplication step
        self.op_count += max(1, 2 * e.bit_length())
        return pow(a % self.p, e, self.p)

    # -- square roots ----------------------------------------------------

    def legendre(self, a: int) -> int:
        """1 for nonzero squares, -1 for non-squares, 0 for zero."""
        a %= self.p
        if a == 0:
            return 0
        t = pow(a, (self.p - 1) // 2, self.p)
        return 1 if t == 1 else -1

    def sqrt(self, a: int) -> int | None:
        """A square root of a via Tonelli-Shanks, or None for non-squares.

        Returns the smaller of the two roots, so results are deterministic.
        """
        p = self.p
        a %= p
        if a == 0:
            return 0
        if self.legendre(a) != 1:
            return None
        if p % 4 == 3:
            r = pow(a, (p + 1) // 4, p)
            return min(r, p - r)
        # write p-1 = q * 2^s with q odd
        q, s = p - 1, 0
        while q % 2 == 0:
            q //= 2
            s += 1
        z = self._sqrt_nonresidue
        if z == 0:
            z = 2
            while self.legendre(z) != -1:
                z += 1
            self._sqrt_nonresidue = z
        m = s
        c = pow(z, q, p)
        t = pow(a, q, p)
        r = pow(a, (q + 1) // 2, p)
        while t != 1:
            t2 = t
            i = 0
            while t2 != 1:
                t2 = t2 * t2 % p
                i += 1
            b = pow(c, 1 << (m - i - 1), p)
            m = i
            c = b * b % p
            t = t * c % p
            r = r * b % p
        return min(r, p - r)

    def rand(self, rng) -> int:
        """Uniform element of F_p drawn from a ``random.Random``."""
        return rng.randrange(self.p)
