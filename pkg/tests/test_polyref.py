import random

import pytest

from ecfft import polyref as pr
from ecfft.errors import PreconditionError
from ecfft.field import PrimeField


F13 = PrimeField(13)
F = PrimeField(7919)


def rand_poly(rng, field, deg):
    if deg < 0:
        return []
    c = [field.rand(rng) for _ in range(deg + 1)]
    c[-1] = rng.randrange(1, field.p)
    return c


def test_mul_trivial():
    assert pr.mul(F13, [], [3, 1]) == []
    # (X+1)(X-1) = X^2 - 1
    assert pr.mul(F13, [1, 1], [12, 1]) == [12, 0, 1]


def test_mul_matches_convolution_sum():
    rng = random.Random(1)
    for _ in range(20):
        a = rand_poly(rng, F13, 7)
        b = rand_poly(rng, F13, 7)
        got = pr.mul(F13, a, b)
        # independent convolution oracle
        exp = [0] * 15
        for i in range(8):
            for j in range(8):
                exp[i + j] = (exp[i + j] + a[i] * b[j]) % 13
        assert got == pr.normalize(exp)


def test_mul_large_p_fallback():
    f = PrimeField((1 << 31) - 1)  # beyond the numpy int64-safe threshold
    rng = random.Random(2)
    a = rand_poly(rng, f, 6)
    b = rand_poly(rng, f, 5)
    exp = [0] * 12
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            exp[i + j] = (exp[i + j] + x * y) % f.p
    assert pr.mul(f, a, b) == pr.normalize(exp)


def test_divrem_trivial():
    q, r = pr.divrem(F13, [1, 0, 1], [0, 1])  # X^2+1 = X*X + 1
    assert (q, r) == ([0, 1], [1])
    q, r = pr.divrem(F13, [5, 2], [1, 1, 1])
    assert (q, r) == ([], [5, 2])
    with pytest.raises(ZeroDivisionError):
        pr.divrem(F13, [1], [])


@pytest.mark.parametrize("field", [F13, F])
def test_divrem_recombines(field):
    rng = random.Random(3)
    for _ in range(25):
        a = rand_poly(rng, field, 9)
        b = rand_poly(rng, field, 4)
        q, r = pr.divrem(field, a, b)
        assert pr.degree(r) < pr.degree(b)
        back = pr.add(field, pr.mul(field, q, b), r)
        assert back == pr.normalize(a)


def test_eval():
    assert pr.eval_at(F13, [7], 5) == 7
    assert pr.eval_at(F13, [0, 1], 5) == 5
    rng = random.Random(4)
    a = rand_poly(rng, F13, 8)
    for _ in range(10):
        x = F13.rand(rng)
        expected = sum(c * pow(x, i, 13) for i, c in enumerate(a)) % 13
        assert pr.eval_at(F13, a, x) == expected
    xs = [F13.rand(rng) for _ in range(9)]
    assert pr.eval_many(F13, a, xs) == [pr.eval_at(F13, a, x) for x in xs]


def test_lagrange_interpolate():
    assert pr.lagrange_interpolate(F13, [(4, 9)]) == [9]
    assert pr.lagrange_interpolate(F13, [(2, 2), (3, 3), (5, 5)]) == [0, 1]
    rng = random.Random(5)
    xs = rng.sample(range(13), 8)
    ys = [F13.rand(rng) for _ in xs]
    poly = pr.lagrange_interpolate(F13, list(zip(xs, ys)))
    assert pr.degree(poly) < 8
    for x, y in zip(xs, ys):
        assert pr.eval_at(F13, poly, x) == y
    with pytest.raises(PreconditionError):
        pr.lagrange_interpolate(F13, [(1, 1), (1, 2)])


def test_interpolate_evaluate_identity():
    rng = random.Random(6)
    for m in (1, 2, 4, 8, 16):
        xs = rng.sample(range(F.p), m)
        poly = rand_poly(rng, F, m - 1)
        ys = pr.eval_many(F, poly, xs)
        assert pr.lagrange_interpolate(F, list(zip(xs, ys))) == pr.normalize(poly)


def test_egcd():
    g, s, t = pr.egcd(F13, [0, 1], [1, 1])
    assert g == [1]
    a = [3, 1, 4]
    g, s, t = pr.egcd(F13, a, a)
    assert g == pr.scale(F13, F13.inv(4), a)
    rng = random.Random(7)
    for _ in range(20):
        a = rand_poly(rng, F, 6)
        b = rand_poly(rng, F, 4)
        g, s, t = pr.egcd(F, a, b)
        lhs = pr.add(F, pr.mul(F, s, a), pr.mul(F, t, b))
        assert lhs == g
        assert pr.is_monic(g)


def test_inv_mod():
    rng = random.Random(8)
    for _ in range(10):
        a = rand_poly(rng, F, 5)
        b = rand_poly(rng, F, 3)
        if pr.egcd(F, a, b)[0] != [1]:
            continue
        c = pr.inv_mod(F, b, a)
        assert pr.rem(F, pr.mul(F, b, c), a) == [1]
        assert pr.degree(c) < pr.degree(a)


def test_find_roots_small():
    assert pr.find_roots_small(F13, [-3 % 13, 1]) == {3}
    assert pr.find_roots_small(F13, [1, 0, 1]) == {5, 8}
    rng = random.Random(9)
    for _ in range(30):
        a = [F13.rand(rng) for _ in range(3)] + [1]
        expected = {x for x in range(13) if pr.eval_at(F13, a, x) == 0}
        assert pr.find_roots_small(F13, a) == expected
    with pytest.raises(PreconditionError):
        pr.find_roots_small(F13, [5])


def test_find_roots_large_p_gcd_path():
    f = PrimeField((1 << 22) + 15)  # forces the gcd-with-X^p-X path
    rng = random.Random(10)
    for _ in range(5):
        roots = rng.sample(range(f.p), 3)
        a = pr.vanishing(f, roots)
        assert pr.find_roots_small(f, a) == set(roots)
    # irreducible-ish: a quadratic with no roots
    while True:
        a = [f.rand(rng), f.rand(rng), 1]
        disc = (a[1] * a[1] - 4 * a[0]) % f.p
        if f.legendre(disc) == -1:
            break
    assert pr.find_roots_small(f, a) == set()


def test_vanishing():
    z = pr.vanishing(F13, [2, 5, 7])
    assert pr.is_monic(z) and pr.degree(z) == 3
    for x in (2, 5, 7):
        assert pr.eval_at(F13, z, x) == 0
    pts = [3, 9, 11, 1]
    vals = pr.eval_vanishing_many(F13, [2, 5], pts)
    z2 = pr.vanishing(F13, [2, 5])
    assert vals == pr.eval_many(F13, z2, pts)


def test_degree_and_normalize():
    assert pr.degree([]) == pr.NEG_INF
    assert str(pr.NEG_INF) == "-inf"
    assert pr.normalize([1, 2, 0, 0]) == [1, 2]
    assert pr.degree([5]) == 0
