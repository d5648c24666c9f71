"""Exact univariate polynomials over the integers and rationals.

Coefficients are stored in ascending order. Integer polynomials stay
integer; anything that needs division (gcd, Sturm remainders) works in
``Fraction`` and can be cleared back to a primitive integer polynomial.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from . import _pure
from ._core import kernels

Number = Union[int, Fraction]
INF = float("inf")


class PolynomialError(ArithmeticError):
    pass


class InexactDivision(PolynomialError):
    """Division left a nonzero remainder."""

    def __init__(self, remainder: "Polynomial"):
        super().__init__(f"nonzero remainder {remainder}")
        self.remainder = remainder


class EndpointIsRoot(PolynomialError):
    def __init__(self, point):
        super().__init__(f"interval endpoint {point} is a root")
        self.point = point


class NoSignChange(PolynomialError):
    pass


class ZeroPolynomial(PolynomialError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Polynomial:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def x(cls) -> "Polynomial":
        return cls((0, 1))

    @classmethod
    def const(cls, c: Number) -> "Polynomial":
        return cls((c,))

    @classmethod
    def linear(cls, root: Number) -> "Polynomial":
        """The monic polynomial ``x - root``."""
        return cls((-root, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lead(self) -> Number:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = Polynomial.const(other)
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({list(self.coeffs)})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            a = abs(c)
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            body = str(a) if (a != 1 or k == 0) else ""
            if body and mono:
                body += "*"
            terms.append((sign, body + mono))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for s, t in terms[1:]:
            out += f" {s} {t}"
        return out

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Polynomial([a[i] + (b[i] if i < len(b) else 0) for i in range(len(a))])

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if not self.coeffs or not other.coeffs:
            return Polynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative exponent")
        result = Polynomial.const(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation. Exact for int/Fraction arguments."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def _lift(p) -> Polynomial:
    if isinstance(p, Polynomial):
        return p
    if isinstance(p, (int, Fraction)):
        return Polynomial.const(p)
    raise TypeError(f"cannot use {type(p).__name__} as a polynomial")


def mul(p: Polynomial, q: Polynomial) -> Polynomial:
    return p * q


def power(p: Polynomial, k: int) -> Polynomial:
    return p ** k


def divmod_poly(p: Polynomial, q: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Quotient and remainder over the rationals (integral when q is monic)."""
    if q.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    rem = list(p.coeffs)
    dq = q.degree
    lead = q.lead
    if len(rem) - 1 < dq:
        return Polynomial(), p
    quot = [0] * (len(rem) - dq)
    for k in range(len(rem) - 1 - dq, -1, -1):
        c = rem[k + dq]
        if c:
            if isinstance(c, int) and isinstance(lead, int) and c % lead == 0:
                t = c // lead
            else:
                t = Fraction(c) / lead
            quot[k] = t
            for i, b in enumerate(q.coeffs):
                rem[k + i] -= t * b
    return Polynomial(quot), Polynomial(rem[:dq])


def div_exact(p: Polynomial, q: Polynomial) -> Polynomial:
    quot, rem = divmod_poly(p, q)
    if not rem.is_zero():
        raise InexactDivision(rem)
    return quot


def divides(q: Polynomial, p: Polynomial) -> bool:
    return divmod_poly(p, q)[1].is_zero()


def derivative(p: Polynomial) -> Polynomial:
    return Polynomial(k * c for k, c in enumerate(p.coeffs) if k)


def content(p: Polynomial) -> Fraction:
    """Positive rational c with p / c primitive integral."""
    if p.is_zero():
        raise ZeroPolynomial("content of the zero polynomial")
    den = 1
    for c in p.coeffs:
        if isinstance(c, Fraction):
            den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in p.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    return Fraction(g, den)


def primitive(p: Polynomial, positive_lead: bool = False) -> Polynomial:
    """p divided by its positive content; optionally flipped to a positive lead."""
    c = content(p)
    out = Polynomial(c2 / c for c2 in p.coeffs)
    if positive_lead and out.lead < 0:
        out = -out
    return out


def gcd(p: Polynomial, q: Polynomial) -> Polynomial:
    """Primitive gcd with positive leading coefficient."""
    a, b = p, q
    while not b.is_zero():
        a, b = b, divmod_poly(a, b)[1]
        if not b.is_zero():
            b = primitive(b)
    if a.is_zero():
        raise ZeroPolynomial("gcd of two zero polynomials")
    return primitive(a, positive_lead=True)


def squarefree_part(p: Polynomial) -> Polynomial:
    """p / gcd(p, p'), primitive with positive lead; same distinct roots as p."""
    if p.is_zero():
        raise ZeroPolynomial("square-free part of the zero polynomial")
    if p.degree == 0:
        return Polynomial.const(1)
    return primitive(div_exact(p, gcd(p, derivative(p))), positive_lead=True)


def squarefree_decomposition(p: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm: factors a_i (squarefree, pairwise coprime) with p ~ prod a_i^i."""
    if p.is_zero():
        raise ZeroPolynomial("decomposition of the zero polynomial")
    out = []
    a = primitive(p, positive_lead=True)
    b = derivative(a)
    c = gcd(a, b) if b.coeffs else Polynomial.const(1)
    w = div_exact(a, c)
    y = div_exact(b, c) if b.coeffs else Polynomial()
    i = 1
    while w.degree > 0:
        z = y - derivative(w)
        g = gcd(w, z) if not z.is_zero() else primitive(w, positive_lead=True)
        if g.degree > 0:
            out.append((g, i))
        w = div_exact(w, g)
        y = div_exact(z, g)
        i += 1
    return out


def sign(x) -> int:
    return (x > 0) - (x < 0)


def sign_at(p: Polynomial, x) -> int:
    """Sign of p(x); x may be an exact number or +/-inf."""
    if p.is_zero():
        return 0
    if x == INF:
        return sign(p.lead)
    if x == -INF:
        return sign(p.lead) * (-1 if p.degree % 2 else 1)
    return sign(p(Fraction(x) if isinstance(x, float) else x))


@dataclass(frozen=True)
class SturmChain:
    polys: tuple[Polynomial, ...]

    def __len__(self):
        return len(self.polys)


def sturm_chain(p: Polynomial, normalize: bool = True) -> SturmChain:
    """g0 = p, g1 = p', g_i = -rem(g_{i-2}, g_{i-1}).

    With ``normalize`` each member is scaled by a positive constant to a
    primitive integer polynomial, which leaves every sign unchanged. With
    ``normalize=False`` the remainders are kept exactly as rationals.
    """
    if p.is_zero():
        raise ZeroPolynomial("Sturm chain of the zero polynomial")
    g0 = primitive(p) if normalize else p
    chain = [g0]
    g1 = derivative(p)
    if g1.is_zero():
        return SturmChain(tuple(chain))
    chain.append(primitive(g1) if normalize else g1)
    while True:
        r = -divmod_poly(chain[-2], chain[-1])[1]
        if r.is_zero():
            break
        chain.append(primitive(r) if normalize else r)
    return SturmChain(tuple(chain))


def sign_pattern(chain: SturmChain, at) -> tuple[int, ...]:
    return tuple(sign_at(g, at) for g in chain.polys)


def sign_variations(chain: SturmChain, at) -> int:
    """Sign changes in the chain at ``at``, ignoring zeros."""
    signs = [s for s in sign_pattern(chain, at) if s]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_distinct_roots_in(p: Polynomial, a, b) -> int:
    """Distinct real roots of p in the half-open interval (a, b].

    Endpoints may be +/-inf. A finite endpoint that is a root raises
    EndpointIsRoot.
    """
    if p.is_zero():
        raise ZeroPolynomial("root count of the zero polynomial")
    if not a < b:
        raise ValueError("need a < b")
    q = squarefree_part(p)
    for e in (a, b):
        if e not in (INF, -INF) and sign_at(q, e) == 0:
            raise EndpointIsRoot(e)
    chain = sturm_chain(q)
    return sign_variations(chain, a) - sign_variations(chain, b)


def descartes_sign_changes(p: Polynomial) -> int:
    if p.is_zero():
        raise ZeroPolynomial("sign changes of the zero polynomial")
    signs = [sign(c) for c in p.coeffs if c]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def cauchy_bound(p: Polynomial) -> Fraction:
    """1 + max |c_i / c_lead|; every real root lies strictly inside +/- this."""
    if p.degree < 1:
        return Fraction(1)
    lead = abs(p.lead)
    return 1 + max(Fraction(abs(c), 1) / lead for c in p.coeffs[:-1])


def refine_root(p: Polynomial, a, b, tol) -> Fraction:
    """Bisection on the square-free part until the bracket width is <= tol."""
    q = squarefree_part(p)
    a, b = Fraction(a), Fraction(b)
    tol = Fraction(tol)
    sa, sb = sign_at(q, a), sign_at(q, b)
    if sa == 0:
        return a
    if sb == 0:
        return b
    if sa == sb:
        raise NoSignChange(f"no sign change on [{a}, {b}]")
    while b - a > tol:
        mid = (a + b) / 2
        sm = sign_at(q, mid)
        if sm == 0:
            return mid
        if sm == sa:
            a = mid
        else:
            b = mid
    return (a + b) / 2


def isolate_roots(p: Polynomial) -> list[tuple[Fraction, Fraction]]:
    """Disjoint brackets (a, b], one per distinct real root, ascending."""
    q = squarefree_part(p)
    if q.degree < 1:
        return []
    chain = sturm_chain(q)
    bound = cauchy_bound(q)

    def count(lo, hi):
        return sign_variations(chain, lo) - sign_variations(chain, hi)

    out = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        k = count(lo, hi)
        if k == 0:
            continue
        if k == 1:
            out.append((lo, hi))
            continue
        mid = (lo + hi) / 2
        while sign_at(q, mid) == 0:
            # keep bracket endpoints off the roots so refinement sees a sign change
            mid = (mid + hi) / 2
        stack.append((lo, mid))
        stack.append((mid, hi))
    return sorted(out)


def real_roots(p: Polynomial, tol=Fraction(1, 10**12)) -> list[Fraction]:
    """Distinct real roots, ascending, each within tol."""
    q = squarefree_part(p)
    return [refine_root(q, lo, hi, tol) for lo, hi in isolate_roots(q)]


def largest_real_root(p: Polynomial, tol=Fraction(1, 10**12)) -> Fraction:
    roots = real_roots(p, tol)
    if not roots:
        raise PolynomialError("no real roots")
    return roots[-1]


def charpoly_exact(m: Sequence[Sequence[int]]) -> Polynomial:
    """det(xI - m) for a square integer matrix, by Faddeev-LeVerrier."""
    n = len(m)
    rows = [tuple(int(v) for v in r) for r in m]
    if n == 0 or any(len(r) != n for r in rows):
        raise ValueError("charpoly_exact needs a nonempty square matrix")
    coeffs = None
    try:
        coeffs = kernels.charpoly_int(n, rows)
    except (OverflowError, ValueError, TypeError):
        coeffs = None
    if coeffs is None:
        coeffs = _pure.charpoly_int(n, rows)
    return Polynomial(coeffs)
