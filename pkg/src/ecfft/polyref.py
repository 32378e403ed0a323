"""Naive reference polynomial arithmetic over F_p.

This is the oracle layer: every fast algorithm in the package is tested
against these routines, and advice precomputation is allowed to use them
freely (precomputation cost is excluded from the fast-path complexity
accounting). Polynomials are coefficient lists, lowest degree first,
normalized so the zero polynomial is ``[]`` and the last entry of a
nonzero polynomial is nonzero. The degree of the zero polynomial is
``-inf``.

Schoolbook algorithms only; inner loops are vectorized with numpy when the
modulus is small enough for exact int64 arithmetic, which changes nothing
semantically.
"""

from __future__ import annotations

import random

import numpy as np

from .errors import PreconditionError, SearchExhaustedError
from .field import PrimeField

NEG_INF = float("-inf")

# int64 convolution sums stay exact below this modulus for lengths <= 2^14
_NUMPY_MAX_P = 1 << 24


def _np_ok(field: PrimeField, length: int = 0) -> bool:
    return field.p <= _NUMPY_MAX_P and length <= (1 << 14)


def normalize(coeffs) -> list[int]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return c


def degree(a) -> int | float:
    """Degree of a normalized polynomial; -inf for the zero polynomial."""
    return len(a) - 1 if a else NEG_INF


def is_monic(a) -> bool:
    return bool(a) and a[-1] == 1


def add(field: PrimeField, a, b) -> list[int]:
    p = field.p
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, x in enumerate(b):
        out[i] = (out[i] + x) % p
    field.tick(len(b))
    return normalize(out)


def sub(field: PrimeField, a, b) -> list[int]:
    p = field.p
    out = list(a) + [0] * max(0, len(b) - len(a))
    for i, x in enumerate(b):
        out[i] = (out[i] - x) % p
    field.tick(len(b))
    return normalize(out)


def scale(field: PrimeField, c: int, a) -> list[int]:
    p = field.p
    field.tick(len(a))
    return normalize([c * x % p for x in a])


def mul(field: PrimeField, a, b) -> list[int]:
    """Schoolbook product, O(deg a * deg b)."""
    if not a or not b:
        return []
    p = field.p
    la, lb = len(a), len(b)
    # unit cost per coefficient multiply plus the accumulating additions
    field.tick(la * lb + max(0, la * lb - (la + lb - 1)))
    if _np_ok(field, min(la, lb)):
        out = np.convolve(np.asarray(a, dtype=np.int64), np.asarray(b, dtype=np.int64)) % p
        return normalize(out.tolist())
    out = [0] * (la + lb - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            out[i + j] = (out[i + j] + x * y) % p
    return normalize(out)


def divrem(field: PrimeField, a, b) -> tuple[list[int], list[int]]:
    """Quotient and remainder with deg r < deg b. Raises on zero divisor."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    p = field.p
    a = normalize(a)
    if len(a) < len(b):
        return [], a
    db = len(b) - 1
    inv_lead = pow(b[-1], p - 2, p)
    nq = len(a) - db
    field.tick((db + 2) * nq)
    if _np_ok(field, len(a)):
        rem = np.asarray(a, dtype=np.int64)
        bb = np.asarray(b[:-1], dtype=np.int64)
        q = np.zeros(nq, dtype=np.int64)
        for i in range(len(a) - 1, db - 1, -1):
            c = rem[i] * inv_lead % p
            q[i - db] = c
            if c and db:
                rem[i - db:i] = (rem[i - db:i] - c * bb) % p
            rem[i] = 0
        return normalize(q.tolist()), normalize(rem.tolist())
    rem = list(a)
    q = [0] * nq
    for i in range(len(a) - 1, db - 1, -1):
        c = rem[i] * inv_lead % p
        q[i - db] = c
        if c:
            for j in range(db):
                rem[i - db + j] = (rem[i - db + j] - c * b[j]) % p
        rem[i] = 0
    return normalize(q), normalize(rem)


def rem(field: PrimeField, a, b) -> list[int]:
    return divrem(field, a, b)[1]


def eval_at(field: PrimeField, a, x: int) -> int:
    """Horner evaluation at a single point."""
    p = field.p
    acc = 0
    for c in reversed(a):
        acc = (acc * x + c) % p
    field.tick(2 * len(a))
    return acc


def eval_many(field: PrimeField, a, xs) -> list[int]:
    """Horner evaluation at many points (vectorized when possible)."""
    p = field.p
    field.tick(2 * len(a) * len(xs))
    if _np_ok(field) and len(xs) > 4:
        pts = np.asarray(xs, dtype=np.int64)
        acc = np.zeros(len(xs), dtype=np.int64)
        for c in reversed(a):
            acc = (acc * pts + c) % p
        return acc.tolist()
    return [eval_at(field, a, x) for x in xs]


def vanishing(field: PrimeField, points) -> list[int]:
    """Coefficients of prod (X - alpha) over the given points."""
    polys = [[-x % field.p, 1] for x in points]
    if not polys:
        return [1]
    while len(polys) > 1:
        nxt = [mul(field, polys[i], polys[i + 1]) for i in range(0, len(polys) - 1, 2)]
        if len(polys) % 2:
            nxt.append(polys[-1])
        polys = nxt
    return polys[0]


def eval_vanishing_many(field: PrimeField, roots, xs) -> list[int]:
    """Evaluate prod (X - r) at each x without forming coefficients."""
    p = field.p
    field.tick(2 * len(roots) * len(xs))
    if _np_ok(field) and len(xs) > 4:
        acc = np.ones(len(xs), dtype=np.int64)
        pts = np.asarray(xs, dtype=np.int64)
        for r in roots:
            acc = acc * ((pts - r) % p) % p
        return acc.tolist()
    out = []
    for x in xs:
        acc = 1
        for r in roots:
            acc = acc * (x - r) % p
        out.append(acc)
    return out


def lagrange_interpolate(field: PrimeField, points) -> list[int]:
    """Unique polynomial of degree < len(points) through all (x, y) pairs.

    Newton's divided differences, O(m^2). Raises on duplicate x values.
    """
    p = field.p
    xs = [x % p for x, _ in points]
    ys = [y % p for _, y in points]
    if len(set(xs)) != len(xs):
        raise PreconditionError("interpolation points must have distinct x values")
    m = len(xs)
    # divided-difference coefficients
    dd = list(ys)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            num = (dd[i] - dd[i - 1]) % p
            den = (xs[i] - xs[i - j]) % p
            dd[i] = num * pow(den, p - 2, p) % p
    field.tick(3 * m * m)
    # expand the Newton form by Horner: P = (...(dd[m-1](X-x[m-2]) + dd[m-2])...) + dd[0]
    out = [0] * m
    out[0] = dd[m - 1]
    deg = 0
    for j in range(m - 2, -1, -1):
        for i in range(deg + 1, 0, -1):
            out[i] = (out[i - 1] - out[i] * xs[j]) % p
        out[0] = (dd[j] - out[0] * xs[j]) % p
        deg += 1
    return normalize(out)


def egcd(field: PrimeField, a, b) -> tuple[list[int], list[int], list[int]]:
    """Extended gcd: returns (g, s, t) with s*a + t*b = g and g monic."""
    a = normalize(a)
    b = normalize(b)
    if not a and not b:
        raise PreconditionError("gcd of two zero polynomials")
    r0, r1 = a, b
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divrem(field, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(field, s0, mul(field, q, s1))
        t0, t1 = t1, sub(field, t0, mul(field, q, t1))
    lead_inv = field.inv(r0[-1])
    return (
        scale(field, lead_inv, r0),
        scale(field, lead_inv, s0),
        scale(field, lead_inv, t0),
    )


def inv_mod(field: PrimeField, b, a) -> list[int]:
    """The unique C with deg C < deg a and b*C = 1 (mod a); requires coprimality."""
    g, _, t = egcd(field, a, b)
    if g != [1]:
        raise PreconditionError("polynomials are not coprime")
    return rem(field, t, a)


def _gcd(field: PrimeField, a, b) -> list[int]:
    while b:
        a, b = b, rem(field, a, b)
    return scale(field, field.inv(a[-1]), a) if a else []


def _pow_mod_x(field: PrimeField, e: int, modulus) -> list[int]:
    """X^e rem modulus by square-and-multiply."""
    result = [1]
    base = rem(field, [0, 1], modulus)
    while e:
        if e & 1:
            result = rem(field, mul(field, result, base), modulus)
        base = rem(field, mul(field, base, base), modulus)
        e >>= 1
    return result


def _pow_mod(field: PrimeField, base, e: int, modulus) -> list[int]:
    result = [1]
    base = rem(field, base, modulus)
    while e:
        if e & 1:
            result = rem(field, mul(field, result, base), modulus)
        base = rem(field, mul(field, base, base), modulus)
        e >>= 1
    return result


def find_roots_small(field: PrimeField, a) -> set[int]:
    """All roots in F_p of a polynomial with 1 <= deg <= 3.

    Brute-force scan for small p; for larger p, gcd with X^p - X isolates
    the distinct linear factors, which are then split off randomly.
    """
    a = normalize(a)
    d = degree(a)
    if not 1 <= (d if d != NEG_INF else -1) <= 3:
        raise PreconditionError("root finding supports degrees 1..3 only")
    p = field.p
    if p < (1 << 20):
        if _np_ok(field):
            xs = np.arange(p, dtype=np.int64)
            acc = np.zeros(p, dtype=np.int64)
            for c in reversed(a):
                acc = (acc * xs + c) % p
            return set(int(x) for x in np.nonzero(acc == 0)[0])
        return {x for x in range(p) if eval_at(field, a, x) == 0}
    # split-off-linear-factors path
    xp = _pow_mod_x(field, p, a)
    g = _gcd(field, sub(field, xp, [0, 1]), a)
    return _split_linear_product(field, g)


def _split_linear_product(field: PrimeField, g) -> set[int]:
    """Roots of a squarefree product of linear factors (deg g <= 3)."""
    p = field.p
    d = len(g) - 1
    if d <= 0:
        return set()
    if d == 1:
        return {-g[0] * pow(g[1], p - 2, p) % p}
    # randomized equal-degree splitting for fully-split squarefree g
    rng = random.Random(0xEC)
    for _ in range(200):
        c = rng.randrange(p)
        h = _pow_mod(field, [c, 1], (p - 1) // 2, g)
        h = sub(field, h, [1])
        f1 = _gcd(field, h, g)
        if 0 < len(f1) - 1 < d:
            f2 = divrem(field, g, f1)[0]
            return _split_linear_product(field, f1) | _split_linear_product(field, f2)
    raise SearchExhaustedError("could not split linear factors")
