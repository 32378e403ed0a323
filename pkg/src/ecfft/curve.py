"""Short-Weierstrass elliptic curves over F_p: group law, point counting,
2-power group structure, curve search, and explicit 2-isogenies.

Points are affine pairs ``(x, y)`` of canonical residues; the point at
infinity (the group identity) is ``None``. Only characteristic > 3 is
supported, which keeps the curve equation in the form y^2 = x^3 + ax + b
and the 2-isogeny formulas short.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import gcd, isqrt

import numpy as np

from . import polyref
from .errors import PreconditionError, SearchExhaustedError
from .field import PrimeField

Point = "tuple[int, int] | None"


@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + a*x + b over the given prime field; must be nonsingular."""

    field: PrimeField
    a: int
    b: int

    def __post_init__(self):
        p = self.field.p
        object.__setattr__(self, "a", self.a % p)
        object.__setattr__(self, "b", self.b % p)
        if (4 * self.a ** 3 + 27 * self.b ** 2) % p == 0:
            raise PreconditionError("singular curve: 4a^3 + 27b^2 = 0")

    def rhs(self, x: int) -> int:
        p = self.field.p
        return (x * x % p * x + self.a * x + self.b) % p

    def contains(self, pt) -> bool:
        if pt is None:
            return True
        x, y = pt
        return y * y % self.field.p == self.rhs(x)


def _check_on_curve(c: Curve, pt) -> None:
    if not c.contains(pt):
        raise PreconditionError(f"point {pt} is not on the curve")


def neg(c: Curve, pt):
    if pt is None:
        return None
    x, y = pt
    return (x, -y % c.field.p)


def _add_unchecked(c: Curve, P, Q):
    if P is None:
        return Q
    if Q is None:
        return P
    p = c.field.p
    x1, y1 = P
    x2, y2 = Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return None
        # tangent line (doubling)
        lam = (3 * x1 * x1 + c.a) * pow(2 * y1, p - 2, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, p - 2, p) % p
    x3 = (lam * lam - x1 - x2) % p
    y3 = (lam * (x1 - x3) - y1) % p
    return (x3, y3)


def add(c: Curve, P, Q):
    """Group law by chord and tangent; identity is None."""
    _check_on_curve(c, P)
    _check_on_curve(c, Q)
    return _add_unchecked(c, P, Q)


def scalar_mul(c: Curve, n: int, P):
    """n*P by double-and-add; negative n negates first."""
    _check_on_curve(c, P)
    if n < 0:
        n, P = -n, neg(c, P)
    acc = None
    cur = P
    while n:
        if n & 1:
            acc = _add_unchecked(c, acc, cur)
        cur = _add_unchecked(c, cur, cur)
        n >>= 1
    return acc


def random_point(c: Curve, rng: random.Random):
    """Uniform-ish affine point: random x until the cubic is a square."""
    f = c.field
    while True:
        x = f.rand(rng)
        y = f.sqrt(c.rhs(x))
        if y is None:
            continue
        if y != 0 and rng.getrandbits(1):
            y = f.p - y
        return (x, y)


def all_points(c: Curve) -> list:
    """Every point including O; intended for tiny fields only."""
    pts = [None]
    for x in range(c.field.p):
        y = c.field.sqrt(c.rhs(x))
        if y is None:
            continue
        pts.append((x, y))
        if y != 0:
            pts.append((x, c.field.p - y))
    return pts


def _hasse_width(p: int) -> int:
    w = isqrt(4 * p)
    if w * w > 4 * p:
        w -= 1
    return w  # floor(2*sqrt(p))


def hasse_interval(p: int) -> tuple[int, int]:
    w = _hasse_width(p)
    return p + 1 - w, p + 1 + w


def _order_by_character_sum(c: Curve) -> int:
    """Exact |E(F_p)| = 1 + sum_x (1 + chi(x^3+ax+b)), vectorized.

    O(p) time and memory; used for p up to ~2^20.
    """
    p = c.field.p
    xs = np.arange(p, dtype=np.int64)
    sq = xs * xs % p
    is_qr = np.zeros(p, dtype=bool)
    is_qr[sq] = True
    rhs = (sq * xs + c.a * xs + c.b) % p
    n_zero = int(np.count_nonzero(rhs == 0))
    n_qr = int(np.count_nonzero(is_qr[rhs] & (rhs != 0)))
    return 1 + n_zero + 2 * n_qr


def _order_multiple_scan(c: Curve, P) -> list[int]:
    """All N in the Hasse interval with N*P = O (baby-step giant-step).

    The result is the set of multiples of ord(P) in the interval; it always
    contains |E|.
    """
    p = c.field.p
    w = _hasse_width(p)
    r = isqrt(2 * w + 1) + 1
    baby = {}
    cur = None
    for j in range(r):
        if cur not in baby:
            baby[cur] = j
        cur = _add_unchecked(c, cur, P)
    q0 = scalar_mul(c, p + 1, P)
    step = scalar_mul(c, r, P)
    i_min = -(w // r) - 1
    i_max = w // r + 1
    s = _add_unchecked(c, q0, scalar_mul(c, i_min * r, P))
    found = []
    for i in range(i_min, i_max + 1):
        j = baby.get(neg(c, s))
        if j is not None:
            t = i * r + j
            if -w <= t <= w:
                found.append(p + 1 + t)
        s = _add_unchecked(c, s, step)
    return sorted(set(found))


def _multiples_in(lo: int, hi: int, e: int) -> list[int]:
    start = (lo + e - 1) // e * e
    return list(range(start, hi + 1, e))


def _nonresidue(f: PrimeField) -> int:
    d = 2
    while f.legendre(d) != -1:
        d += 1
    return d


def curve_order(c: Curve, rng: random.Random | None = None) -> int:
    """Exact group order, always inside the Hasse interval.

    A full character sum for small p; otherwise point orders are collected
    by BSGS on the curve and its quadratic twist until the pair
    |E| + |E_twist| = 2p + 2 pins the order uniquely.
    """
    p = c.field.p
    if p <= (1 << 20):
        return _order_by_character_sum(c)
    rng = rng if rng is not None else random.Random(0)
    lo, hi = hasse_interval(p)
    d = _nonresidue(c.field)
    twist = Curve(c.field, c.a * d * d % p, c.b * d ** 3 % p)
    known = [1, 1]  # lcm of observed point orders on (curve, twist)
    curves = [c, twist]
    for round_ in range(64):
        side = round_ % 2
        hits = _order_multiple_scan(curves[side], random_point(curves[side], rng))
        if len(hits) == 1:
            n = hits[0]
            return n if side == 0 else 2 * p + 2 - n
        ord_p = min(b - a for a, b in zip(hits, hits[1:]))
        known[side] = known[side] * ord_p // gcd(known[side], ord_p)
        cand_e = set(_multiples_in(lo, hi, known[0]))
        cand_t = {2 * p + 2 - m for m in _multiples_in(lo, hi, known[1])}
        inter = cand_e & cand_t
        if len(inter) == 1:
            return inter.pop()
    raise SearchExhaustedError("point counting did not converge")


def _pow2_order(c: Curve, Q, cap: int) -> int | None:
    """log2 of ord(Q) for a point of 2-power order, or None past the cap."""
    j = 0
    while Q is not None:
        Q = _add_unchecked(c, Q, Q)
        j += 1
        if j > cap:
            return None
    return j


def two_sylow_structure(c: Curve, N: int, rng: random.Random | None = None,
                        samples: int = 64) -> tuple[int, int, object]:
    """Shape (l1, l2) of the 2-Sylow subgroup Z/2^l1 x Z/2^l2, l1 <= l2,
    plus a witness point of order exactly 2^l2.

    l1 + l2 is the 2-adic valuation of N. The rank comes from the root
    count of the curve cubic (1 root => cyclic 2-Sylow); l2 is the largest
    2-power point order seen over random samples, so the answer is
    probabilistic for rank 2 — downstream tree validation re-certifies it.
    """
    rng = rng if rng is not None else random.Random(0)
    v = 0
    while N % (1 << (v + 1)) == 0:
        v += 1
    if v == 0:
        return 0, 0, None
    roots = polyref.find_roots_small(c.field, [c.b, c.a, 0, 1])
    rank = 1 if len(roots) == 1 else 2
    odd = N >> v
    best_j, best_pt = 0, None
    target = v if rank == 1 else v - 1
    for _ in range(samples):
        Q = scalar_mul(c, odd, random_point(c, rng))
        j = _pow2_order(c, Q, v)
        if j is not None and j > best_j:
            best_j, best_pt = j, Q
            if best_j >= target:
                break
    if rank == 1:
        if best_j != v:
            raise SearchExhaustedError("failed to find a maximal 2-power point")
        l1, l2 = 0, v
    else:
        l2 = best_j
        l1 = v - l2
        if not 1 <= l1 <= l2:
            raise SearchExhaustedError("2-Sylow sampling failed or is inconsistent")
    return l1, l2, best_pt


def find_curve(p: int, K: int, rng: random.Random | None = None,
               max_tries: int = 400_000) -> tuple[Curve, int]:
    """A curve over F_p whose order N satisfies K | N and N > 2K.

    K must be a power of two with K <= 2*sqrt(p) and p >= 7; existence is
    then guaranteed. Candidate orders are the multiples of K in the Hasse
    interval; random curves are drawn until one hits a candidate (full
    sweep for small p).
    """
    if p < 7:
        raise PreconditionError("p must be at least 7")
    if K < 1 or K & (K - 1):
        raise PreconditionError("K must be a power of two")
    if K * K > 4 * p:
        raise PreconditionError(f"K={K} exceeds 2*sqrt(p) for p={p}")
    field = PrimeField(p)
    rng = rng if rng is not None else random.Random(0)
    lo, hi = hasse_interval(p)
    targets = {n for n in _multiples_in(lo, hi, K) if n > 2 * K}
    if not targets:
        raise SearchExhaustedError("no admissible order in the Hasse interval")

    def try_curve(a, b):
        if (4 * a ** 3 + 27 * b ** 2) % p == 0:
            return None
        c = Curve(field, a, b)
        if p > (1 << 20):
            # cheap rejection: |E| is a multiple of one random point's order
            hits = _order_multiple_scan(c, random_point(c, rng))
            if not targets.intersection(hits):
                return None
        n = curve_order(c, rng)
        return (c, n) if n in targets else None

    cap = 4000 if p <= 2000 else max_tries
    for _ in range(cap):
        got = try_curve(field.rand(rng), field.rand(rng))
        if got:
            return got
    if p <= 400:
        for a in range(p):
            for b in range(p):
                got = try_curve(a, b)
                if got:
                    return got
        raise SearchExhaustedError(f"no curve with K | N, N > 2K over p={p}")
    raise SearchExhaustedError("curve search budget exhausted")


@dataclass(frozen=True)
class Isogeny2:
    """A separable 2-isogeny with kernel {O, (kernel_x, 0)} and its x-line map.

    The induced degree-2 rational map is psi = u/v with u = X^2 - x0*X + t,
    v = X - x0, t = 3*x0^2 + a; for every point P outside the kernel,
    x(phi(P)) = psi(x(P)).
    """

    source: Curve
    target: Curve
    kernel_x: int
    u: tuple[int, int, int]  # coefficients, low degree first
    v: tuple[int, int]

    def map_x(self, x: int) -> int | None:
        """psi(x); None encodes the point at infinity (the pole x0)."""
        p = self.source.field.p
        den = (x - self.kernel_x) % p
        if den == 0:
            return None
        u0, u1, u2 = self.u
        num = ((u2 * x + u1) * x + u0) % p
        return num * pow(den, p - 2, p) % p

    def map_point(self, pt):
        """Push a point through the isogeny (group homomorphism)."""
        if pt is None:
            return None
        p = self.source.field.p
        x, y = pt
        if x == self.kernel_x and y == 0:
            return None
        xx = self.map_x(x)
        t = self.u[0]  # u(x0) = t
        den = (x - self.kernel_x) % p
        dy = (1 - t * pow(den * den % p, p - 2, p)) % p
        return (xx, y * dy % p)


def velu_2_isogeny(c: Curve, T) -> Isogeny2:
    """Quotient isogeny E -> E/<T> for a rational point T of order 2."""
    if T is None or T[1] != 0 or not c.contains(T):
        raise PreconditionError("kernel point must be affine of order 2")
    p = c.field.p
    x0 = T[0]
    t = (3 * x0 * x0 + c.a) % p
    w = x0 * t % p
    target = Curve(c.field, (c.a - 5 * t) % p, (c.b - 7 * w) % p)
    u = (t, -x0 % p, 1)
    v = (-x0 % p, 1)
    if t == 0:
        raise PreconditionError("degenerate kernel (singular source curve)")
    return Isogeny2(source=c, target=target, kernel_x=x0, u=u, v=v)
