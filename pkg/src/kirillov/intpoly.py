"""Exact univariate integer polynomials in the indeterminate q.

Coefficients are arbitrary-precision Python ints stored lowest degree
first; the zero polynomial has an empty coefficient tuple.  On top of the
ring arithmetic this module provides the pieces the counting results rely
on: exact interpolation from integer sample points, the split of a
polynomial into q^a * (q-1)^b * R with R(0), R(1) nonzero, distinct-degree
factorization degrees modulo a prime, and a certificate-producing
irreducibility test over Z[q] (mod-p certificates, factor-degree pruning
across primes, and a complete Kronecker search as the fallback).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import (
    BadPrime,
    DuplicateAbscissa,
    NonIntegerCoefficients,
    ZeroPolynomial,
)


class IntPoly:
    """Univariate polynomial over Z, coefficient of q^i at index i."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    # -- constructors ---------------------------------------------------

    @classmethod
    def q(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def from_text(cls, text: str) -> "IntPoly":
        """Parse a comma-separated coefficient list, lowest degree first."""
        parts = [p.strip() for p in text.split(",")]
        return cls(int(p) for p in parts if p)

    # -- structure ------------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    @property
    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    # -- ring operations ------------------------------------------------

    def __add__(self, other):
        other = _coerce(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return IntPoly(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_coerce(other))

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result = IntPoly((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def shift(self, k: int) -> "IntPoly":
        """Multiply by q^k."""
        if self.is_zero():
            return self
        return IntPoly((0,) * k + self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == IntPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    # -- evaluation -----------------------------------------------------

    def __call__(self, x: int) -> int:
        """Horner evaluation at an integer point."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_in(self, ctx, x):
        """Horner evaluation at a field element of ``ctx``."""
        acc = ctx.zero
        for c in reversed(self.coeffs):
            acc = ctx.add(ctx.mul(acc, x), ctx.from_int(c))
        return acc

    # -- presentation ---------------------------------------------------

    def text(self) -> str:
        """ASCII form, lowest degree first, e.g. ``1 + 2q - 3q^2``."""
        if self.is_zero():
            return "0"
        chunks = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mag = abs(c)
            if i == 0:
                body = str(mag)
            elif i == 1:
                body = "q" if mag == 1 else f"{mag}q"
            else:
                body = f"q^{i}" if mag == 1 else f"{mag}q^{i}"
            if not chunks:
                chunks.append(body if c > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"IntPoly({self.text()!r})"


def _coerce(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, int):
        return IntPoly((x,))
    raise TypeError(f"cannot coerce {type(x).__name__} to IntPoly")


ONE = IntPoly((1,))
Q = IntPoly((0, 1))
Q_MINUS_1 = IntPoly((-1, 1))


def poly_eval(p: IntPoly, x):
    """Evaluate ``p`` at an integer (plain Horner)."""
    return p(x)


# ---------------------------------------------------------------------------
# interpolation
# ---------------------------------------------------------------------------


def poly_interpolate(points) -> IntPoly:
    """Exact interpolating polynomial through integer ``(x, y)`` points.

    Uses Newton's divided differences over exact rationals and insists the
    final coefficients are integers; anything else means the samples do
    not come from an integer polynomial of that degree.
    """
    pts = [(int(x), int(y)) for x, y in points]
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa(f"duplicate abscissa in {sorted(xs)}")
    if not pts:
        return IntPoly()
    # divided-difference table, exact
    coefs = [Fraction(y) for _, y in pts]
    for level in range(1, len(pts)):
        for i in range(len(pts) - 1, level - 1, -1):
            coefs[i] = (coefs[i] - coefs[i - 1]) / (xs[i] - xs[i - level])
    # expand the Newton form: P = c0 + (q - x0)(c1 + (q - x1)(c2 + ...))
    poly = [coefs[-1]]
    for i in range(len(pts) - 2, -1, -1):
        # multiply by (q - xs[i]) then add coefs[i]
        shifted = [Fraction(0)] + poly
        poly = [shifted[j] - xs[i] * (poly[j] if j < len(poly) else 0)
                for j in range(len(shifted))]
        poly[0] += coefs[i]
    ints = []
    for c in poly:
        if c.denominator != 1:
            raise NonIntegerCoefficients(f"coefficient {c} is not an integer")
        ints.append(int(c))
    return IntPoly(ints)


# ---------------------------------------------------------------------------
# the q^a (q-1)^b split
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SplitForm:
    """``q^a * (q-1)^b * r`` with ``r(0)`` and ``r(1)`` nonzero."""

    a: int
    b: int
    r: IntPoly

    def reconstruct(self) -> IntPoly:
        return Q**self.a * Q_MINUS_1**self.b * self.r


def split_qfactors(p: IntPoly) -> SplitForm:
    """Split off the maximal powers of q and q-1."""
    if p.is_zero():
        raise ZeroPolynomial("cannot split the zero polynomial")
    a = 0
    while p.coeff(a) == 0:
        a += 1
    rest = IntPoly(p.coeffs[a:])
    b = 0
    while rest(1) == 0:
        rest = _divide_by_q_minus_1(rest)
        b += 1
    return SplitForm(a=a, b=b, r=rest)


def _divide_by_q_minus_1(p: IntPoly) -> IntPoly:
    # synthetic division by (q - 1); caller guarantees p(1) == 0
    out = [0] * p.degree
    carry = 0
    for i in range(p.degree, 0, -1):
        carry += p.coeffs[i]
        out[i - 1] = carry
    return IntPoly(out)


# ---------------------------------------------------------------------------
# arithmetic of polynomials modulo a prime (dense int lists, lowest first)
# ---------------------------------------------------------------------------


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _ptrim(out)


def _pdivmod(a, b, p):
    a = list(a)
    inv_lead = pow(b[-1], p - 2, p)
    quot = [0] * max(len(a) - len(b) + 1, 0)
    for shift in range(len(a) - len(b), -1, -1):
        f = (a[shift + len(b) - 1] * inv_lead) % p
        if f:
            quot[shift] = f
            for i, c in enumerate(b):
                a[shift + i] = (a[shift + i] - f * c) % p
    return _ptrim(quot), _ptrim(a)


def _pmonic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [(c * inv) % p for c in a]


def _pgcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        _, r = _pdivmod(a, b, p)
        a, b = b, r
    return _pmonic(a, p)


def _pderiv(a, p):
    return _ptrim([(i * c) % p for i, c in enumerate(a)][1:])


def _ppowmod(base, e, mod, p):
    result = [1]
    base = _pdivmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _squarefree_parts(f, p):
    """Decompose monic f over GF(p) into [(g, m)] with f = prod g^m, g squarefree."""
    out = []
    d = _pderiv(f, p)
    if not d:
        # f = h(x^p) = (p-th root of f)^p since Frobenius fixes GF(p)
        root = _ptrim([f[i] for i in range(0, len(f), p)])
        for g, m in _squarefree_parts(root, p):
            out.append((g, m * p))
        return out
    c = _pgcd(f, d, p)
    w = _pdivmod(f, c, p)[0]
    i = 1
    while len(w) > 1:
        y = _pgcd(w, c, p)
        z = _pdivmod(w, y, p)[0]
        if len(z) > 1:
            out.append((z, i))
        w = y
        c = _pdivmod(c, y, p)[0]
        i += 1
    if len(c) > 1:
        for g, m in _squarefree_parts(c, p):
            out.append((g, m * p))
    return out


def _ddf_squarefree(f, p):
    """Degrees of the irreducible factors of squarefree monic f over GF(p)."""
    degrees = []
    g = list(f)
    h = [0, 1]  # the polynomial x
    d = 0
    while len(g) - 1 > 0:
        d += 1
        if 2 * d > len(g) - 1:
            degrees.append(len(g) - 1)
            break
        h = _ppowmod(h, p, g, p)
        diff = list(h)
        while len(diff) < 2:
            diff.append(0)
        diff[1] = (diff[1] - 1) % p
        gd = _pgcd(_ptrim(diff), g, p)
        if len(gd) - 1 > 0:
            degrees.extend([d] * ((len(gd) - 1) // d))
            g = _pdivmod(g, gd, p)[0]
            h = _pdivmod(h, g, p)[1]
    return degrees


def ddf_degrees(f: IntPoly, p: int) -> list[int]:
    """Degrees (with multiplicity) of the irreducible factors of f mod p."""
    if f.leading % p == 0:
        raise BadPrime(f"{p} divides the leading coefficient {f.leading}")
    fbar = _pmonic(_ptrim([c % p for c in f.coeffs]), p)
    degrees = []
    for g, m in _squarefree_parts(fbar, p):
        degrees.extend(_ddf_squarefree(g, p) * m)
    return sorted(degrees)


# ---------------------------------------------------------------------------
# irreducibility over Z[q]
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Verdict:
    """Outcome of the irreducibility test.

    kind is one of ``unit``, ``irreducible``, ``reducible``.  For
    irreducible verdicts ``method``/``witness`` identify the certificate:
    ``degree-1``; ``mod-p`` with the prime; ``degree-set`` with the primes
    whose factor-degree sets have empty intersection; or
    ``kronecker-exhausted`` after a complete factor search.  Reducible
    verdicts carry factors that multiply back to the input.
    """

    kind: str
    method: str = ""
    witness: tuple = ()
    factors: tuple = ()

    @property
    def is_irreducible(self) -> bool:
        return self.kind == "irreducible"

    @property
    def is_reducible(self) -> bool:
        return self.kind == "reducible"


def _first_primes_over_3(count: int, avoid: int):
    """First ``count`` primes > 3 that do not divide ``avoid``."""
    primes = []
    n = 5
    while len(primes) < count:
        if all(n % d for d in range(2, isqrt(n) + 1)):
            if avoid % n != 0:
                primes.append(n)
        n += 2
    return primes


def _subset_sums(degrees) -> set[int]:
    sums = {0}
    for d in degrees:
        sums |= {s + d for s in sums}
    return sums


def _divisors_signed(n: int) -> list[int]:
    """Divisors of |n| with both signs, ordered by (|d|, sign)."""
    n = abs(n)
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    out = []
    for d in small + large[::-1]:
        out.extend((d, -d))
    return out


def _divide_exact(a: IntPoly, b: IntPoly):
    """Exact quotient a / b over Z, or None if b does not divide a."""
    if b.is_zero():
        return None
    rem = [Fraction(c) for c in a.coeffs]
    quot = [Fraction(0)] * max(a.degree - b.degree + 1, 0)
    for shift in range(a.degree - b.degree, -1, -1):
        f = rem[shift + b.degree] / b.leading
        quot[shift] = f
        if f:
            for i, c in enumerate(b.coeffs):
                rem[shift + i] -= f * c
    if any(r != 0 for r in rem):
        return None
    if any(c.denominator != 1 for c in quot):
        return None
    return IntPoly(int(c) for c in quot)


def _kronecker_points(count: int):
    """Evaluation abscissas 0, 1, -1, 2, -2, ..."""
    pts = [0]
    k = 1
    while len(pts) < count:
        pts.append(k)
        if len(pts) < count:
            pts.append(-k)
        k += 1
    return pts


def _kronecker_search(r: IntPoly, candidate_degrees):
    """Complete factor search over the candidate degrees, smallest first.

    Any factor of degree d is pinned by its values at d+1 points, and each
    value must divide r there; tuples are scanned in a fixed order so the
    reported factorization is deterministic.
    """
    for d in sorted(candidate_degrees):
        xs, vals = [], []
        for x in _kronecker_points(2 * (d + 1)):
            v = r(x)
            if v == 0:
                # integer root: immediate linear factor
                g = IntPoly((-x, 1))
                return g, _divide_exact(r, g)
            xs.append(x)
            vals.append(v)
            if len(xs) == d + 1:
                break
        for combo in itertools.product(*[_divisors_signed(v) for v in vals]):
            try:
                g = poly_interpolate(zip(xs, combo))
            except NonIntegerCoefficients:
                continue
            if g.degree != d:
                continue
            if g.leading < 0:
                g = -g
            if g.constant_term == 0:
                continue
            quot = _divide_exact(r, g)
            if quot is not None:
                return g, quot
    return None


def irreducibility(r: IntPoly, certificate_primes: int = 10) -> Verdict:
    """Classify r as unit / irreducible / reducible over Z[q].

    The pipeline: trivial degrees, then mod-p irreducibility certificates,
    then pruning of achievable factor degrees across the certificate
    primes, then a complete Kronecker search over whatever degrees remain.
    A ``kronecker-exhausted`` verdict is a proof, not a heuristic.
    """
    if r.is_zero():
        raise ZeroPolynomial("irreducibility of the zero polynomial")
    if r.constant_term == 0:
        raise ValueError("expected r(0) != 0; split off powers of q first")
    if r.degree == 0:
        if abs(r.constant_term) == 1:
            return Verdict(kind="unit", method="unit")
        return Verdict(kind="reducible", method="content",
                       factors=(IntPoly((r.constant_term,)),))
    content = 0
    for c in r.coeffs:
        content = gcd(content, c)
    if content > 1:
        prim = IntPoly(c // content for c in r.coeffs)
        return Verdict(kind="reducible", method="content",
                       factors=(IntPoly((content,)), prim))
    if r.degree == 1:
        return Verdict(kind="irreducible", method="degree-1")

    primes = _first_primes_over_3(certificate_primes, abs(r.leading))
    candidate = set(range(1, r.degree // 2 + 1))
    for p in primes:
        degs = ddf_degrees(r, p)
        if degs == [r.degree]:
            return Verdict(kind="irreducible", method="mod-p", witness=(p,))
        candidate &= _subset_sums(degs)
        if not candidate:
            return Verdict(kind="irreducible", method="degree-set",
                           witness=tuple(primes))
    found = _kronecker_search(r, candidate)
    if found is not None:
        g, h = found
        return Verdict(kind="reducible", method="kronecker", factors=(g, h))
    return Verdict(kind="irreducible", method="kronecker-exhausted",
                   witness=tuple(sorted(candidate)))
