import math
import random
from fractions import Fraction

import pytest

from dlambda2.polynomial import (
    INF,
    EndpointIsRoot,
    InexactDivision,
    NoSignChange,
    Polynomial,
    ZeroPolynomial,
    cauchy_bound,
    charpoly_exact,
    count_distinct_roots_in,
    derivative,
    descartes_sign_changes,
    div_exact,
    divmod_poly,
    gcd,
    isolate_roots,
    mul,
    power,
    real_roots,
    refine_root,
    sign_variations,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)

X = Polynomial.x()
CUBIC = Polynomial([5, 13, 7, 1])  # x^3 + 7x^2 + 13x + 5


def _from_roots(roots):
    p = Polynomial.const(1)
    for r in roots:
        p = p * Polynomial.linear(r)
    return p


def test_constructors_and_eval():
    assert Polynomial.linear(3) == X - 3
    assert (X ** 2 - 2)(Fraction(3, 2)) == Fraction(1, 4)
    assert Polynomial([1, 2, 0, 0]).degree == 1
    assert Polynomial([]).is_zero()


def test_charpoly_examples():
    assert charpoly_exact([[0, 1, 2], [1, 0, 1], [2, 1, 0]]) == Polynomial([-4, -6, 0, 1])
    assert charpoly_exact([[0, 1], [1, 0]]) == Polynomial([-1, 0, 1])
    assert charpoly_exact([[-2, -1, -2], [-1, -2, 0], [-1, 0, -3]]) == CUBIC
    with pytest.raises(ValueError):
        charpoly_exact([[1, 2]])


def test_charpoly_matches_expanded_determinant():
    # oracle: Leibniz expansion of det(xI - M) with polynomial entries
    from itertools import permutations

    rng = random.Random(11)
    for _ in range(30):
        n = rng.randint(1, 5)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        det = Polynomial()
        for perm in permutations(range(n)):
            inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
            term = Polynomial.const(-1 if inv % 2 else 1)
            for i in range(n):
                entry = (X if i == perm[i] else Polynomial()) - m[i][perm[i]]
                term = term * entry
            det = det + term
        assert charpoly_exact(m) == det


def test_multiplication_and_exact_division():
    p = power(Polynomial.linear(-1), 2) * Polynomial.linear(-2)
    assert div_exact(p, Polynomial.linear(-1)) == mul(Polynomial.linear(-1), Polynomial.linear(-2))
    with pytest.raises(InexactDivision) as err:
        div_exact(CUBIC, Polynomial.linear(-1))
    assert err.value.remainder == Polynomial.const(-2)


def test_divmod_identity():
    rng = random.Random(2)
    for _ in range(50):
        a = Polynomial([rng.randint(-9, 9) for _ in range(rng.randint(1, 7))])
        b = Polynomial([rng.randint(-9, 9) for _ in range(rng.randint(1, 4))])
        if b.is_zero():
            continue
        q, r = divmod_poly(a, b)
        assert q * b + r == a
        assert r.is_zero() or r.degree < b.degree


def test_derivative_and_squarefree():
    assert derivative(X ** 3) == Polynomial([0, 0, 3])
    assert squarefree_part(power(X + 1, 3)) == X + 1
    assert squarefree_part(X ** 2 - 1) == X ** 2 - 1
    k3 = Polynomial.linear(2) * power(X + 1, 2)
    assert squarefree_part(k3) == Polynomial.linear(2) * (X + 1)
    dec = squarefree_decomposition(power(X - 1, 3) * (X + 2))
    assert dec == [(X + 2, 1), (X - 1, 3)]
    assert gcd(X ** 2 - 1, X ** 2 + 2 * X + 1) == X + 1


def test_sturm_basics():
    chain = sturm_chain(X ** 2 - 2)
    assert sign_variations(chain, -INF) == 2
    assert sign_variations(chain, INF) == 0
    with pytest.raises(ZeroPolynomial):
        sturm_chain(Polynomial())


def test_count_roots_examples():
    half = Fraction(-1, 2)
    # the cubic has a root in (-1, -1/2): -0.51881
    assert count_distinct_roots_in(CUBIC, -1, 0) == 1
    assert count_distinct_roots_in(CUBIC, half, 0) == 0
    assert count_distinct_roots_in(CUBIC, -INF, half) == 3
    assert count_distinct_roots_in(X ** 2 + 4 * X + 2, half, INF) == 0
    assert count_distinct_roots_in(X ** 2 - 2 * X - 2, 0, INF) == 1
    with pytest.raises(EndpointIsRoot):
        count_distinct_roots_in(X - 1, 1, 2)


def test_count_roots_against_known_roots():
    rng = random.Random(9)
    for _ in range(60):
        roots = [Fraction(rng.randint(-20, 20), rng.randint(1, 4)) for _ in range(rng.randint(1, 6))]
        p = _from_roots(roots)
        a = Fraction(rng.randint(-30, 0), 3) + Fraction(1, 7)
        b = a + Fraction(rng.randint(1, 40), 5)
        want = len({r for r in roots if a < r <= b})
        assert count_distinct_roots_in(p, a, b) == want
        assert count_distinct_roots_in(p, -INF, INF) == len(set(roots))


def test_descartes():
    assert descartes_sign_changes(Polynomial([-3, 1, 2])) == 1
    assert descartes_sign_changes(X ** 2 + 1) == 0


def test_refine_root():
    r = refine_root(X ** 2 - 2 * X - 2, -1, 0, Fraction(1, 10**7))
    assert abs(float(r) - (1 - math.sqrt(3))) < 1e-6
    assert refine_root(X + 5, -6, -4, Fraction(1, 100)) == -5
    r = refine_root(CUBIC, -1, Fraction(-1, 2), Fraction(1, 10**6))
    assert abs(float(r) + 0.51881) < 1e-4
    with pytest.raises(NoSignChange):
        refine_root(X ** 2 + 1, -1, 1, Fraction(1, 10))


def test_real_roots_and_isolation():
    roots = real_roots(CUBIC, Fraction(1, 10**9))
    assert len(roots) == 3
    got = sorted(float(r) for r in roots)
    assert all(abs(a - b) < 1e-3 for a, b in zip(got, [-4.1701, -2.3111, -0.51881]))
    # rational roots that land exactly on bisection midpoints
    p = _from_roots([0, 1, -1, 2, Fraction(1, 2)])
    tol = Fraction(1, 10**12)
    got = real_roots(p, tol)
    assert len(got) == 5
    assert all(abs(a - b) <= tol for a, b in zip(got, [-1, 0, Fraction(1, 2), 1, 2]))
    brackets = isolate_roots(p)
    assert all(count_distinct_roots_in(p, a, b) == 1 for a, b in brackets)


def test_cauchy_bound_contains_roots():
    rng = random.Random(4)
    for _ in range(40):
        roots = [rng.randint(-50, 50) for _ in range(rng.randint(1, 5))]
        p = _from_roots(roots) * rng.randint(1, 5)
        assert all(abs(r) < cauchy_bound(p) for r in roots)
