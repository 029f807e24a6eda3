"""Finite fields GF(p^k) and exact dense matrix algebra over them.

Elements are encoded as integers 0..q-1.  For prime fields the encoding
is the residue itself; for extension fields the base-p digits of the
encoding are the coefficients of a degree-<k polynomial, reduced modulo a
monic irreducible modulus found by deterministic search (smallest
canonical encoding first).  Everything is exact; there is no tolerance
anywhere.
"""

from __future__ import annotations

from math import isqrt

from .errors import NotNilpotent, NotPrime
from .partitions import Partition, jordan_type_from_ranks


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, isqrt(n) + 1))


class FieldCtx:
    """Immutable arithmetic context for GF(p^k)."""

    __slots__ = ("p", "k", "q", "modulus")

    def __init__(self, p: int, k: int = 1, _modulus=None):
        if not is_prime(p):
            raise NotPrime(f"{p} is not prime")
        if k < 1:
            raise ValueError("extension degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p**k
        if k == 1:
            self.modulus = None
        else:
            self.modulus = _modulus if _modulus is not None else _find_modulus(p, k)

    # -- element plumbing ------------------------------------------------

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def elements(self):
        """All elements in canonical (lexicographic encoding) order."""
        return range(self.q)

    def from_int(self, n: int) -> int:
        """Reduce an integer into the prime subfield."""
        return n % self.p

    def _vec(self, x: int):
        digits = []
        for _ in range(self.k):
            digits.append(x % self.p)
            x //= self.p
        return digits

    def _enc(self, vec) -> int:
        out = 0
        for d in reversed(vec[: self.k]):
            out = out * self.p + d
        return out

    # -- arithmetic -------------------------------------------------------

    def add(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x + y) % self.p
        return self._enc([(a + b) % self.p for a, b in zip(self._vec(x), self._vec(y))])

    def sub(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x - y) % self.p
        return self._enc([(a - b) % self.p for a, b in zip(self._vec(x), self._vec(y))])

    def neg(self, x: int) -> int:
        if self.k == 1:
            return (-x) % self.p
        return self._enc([(-a) % self.p for a in self._vec(x)])

    def mul(self, x: int, y: int) -> int:
        if self.k == 1:
            return (x * y) % self.p
        prod = [0] * (2 * self.k - 1)
        xv, yv = self._vec(x), self._vec(y)
        for i, a in enumerate(xv):
            if a:
                for j, b in enumerate(yv):
                    prod[i + j] = (prod[i + j] + a * b) % self.p
        return self._enc(_polymod(prod, self.modulus, self.p))

    def scale_int(self, m: int, x: int) -> int:
        """Integer multiple m*x (m reduced into the prime subfield)."""
        return self.mul(self.from_int(m), x)

    def inv(self, x: int) -> int:
        """Multiplicative inverse of a nonzero element (extended Euclid)."""
        if x == 0:
            raise ZeroDivisionError("0 has no inverse")
        if self.k == 1:
            return pow(x, -1, self.p)
        return self._enc(_polyinv(self._vec(x), self.modulus, self.p))

    def pow(self, x: int, e: int) -> int:
        result = 1
        base = x
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    # -- quadratic character ----------------------------------------------

    def quadratic_character(self, x: int) -> int:
        """1 for nonzero squares, -1 for non-squares, 0 for zero.

        Prime fields use the Euler criterion directly; extensions reduce
        to the prime subfield through the norm map x -> x^((q-1)/(p-1)).
        """
        if x == 0:
            return 0
        if self.p == 2:
            return 1
        if self.k == 1:
            return 1 if pow(x, (self.p - 1) // 2, self.p) == 1 else -1
        norm = self.pow(x, (self.q - 1) // (self.p - 1))
        return 1 if pow(norm, (self.p - 1) // 2, self.p) == 1 else -1

    def is_square(self, x: int) -> bool:
        return self.quadratic_character(x) >= 0

    # -- presentation -------------------------------------------------------

    def modulus_poly(self):
        """The modulus as an IntPoly (None for prime fields)."""
        if self.modulus is None:
            return None
        from .intpoly import IntPoly

        return IntPoly(self.modulus)

    def describe(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        from .intpoly import IntPoly

        return f"GF({self.q}) = GF({self.p})[x]/({IntPoly(self.modulus).text()})"

    def __repr__(self):
        return f"FieldCtx(q={self.q})"

    def __eq__(self, other):
        if isinstance(other, FieldCtx):
            return (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        return NotImplemented

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))


def _polymod(poly, modulus, p):
    poly = list(poly)
    k = len(modulus) - 1
    for i in range(len(poly) - 1, k - 1, -1):
        c = poly[i]
        if c:
            for j in range(k + 1):
                poly[i - k + j] = (poly[i - k + j] - c * modulus[j]) % p
    return poly[:k] + [0] * (k - len(poly[:k]))


def _polyinv(vec, modulus, p):
    # extended Euclid in GF(p)[x] against the modulus
    def trim(a):
        while a and a[-1] == 0:
            a.pop()
        return a

    def divmod_(a, b):
        a = list(a)
        inv_lead = pow(b[-1], p - 2, p)
        quot = [0] * max(len(a) - len(b) + 1, 0)
        for shift in range(len(a) - len(b), -1, -1):
            f = (a[shift + len(b) - 1] * inv_lead) % p
            if f:
                quot[shift] = f
                for i, c in enumerate(b):
                    a[shift + i] = (a[shift + i] - f * c) % p
        return trim(quot), trim(a)

    def mul_(a, b):
        if not a or not b:
            return []
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] = (out[i + j] + x * y) % p
        return trim(out)

    def sub_(a, b):
        out = [( (a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0)) % p
               for i in range(max(len(a), len(b)))]
        return trim(out)

    r0, r1 = list(modulus), trim(list(vec))
    s0, s1 = [], [1]
    while r1:
        quot, rem = divmod_(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, sub_(s0, mul_(quot, s1))
    # r0 is a nonzero constant gcd; normalize
    inv_c = pow(r0[0], p - 2, p)
    out = [(c * inv_c) % p for c in s0]
    out += [0] * (len(modulus) - 1 - len(out))
    return out


def _irreducible_over_gfp(coeffs, p) -> bool:
    """Trial division of a monic polynomial by all lower-degree monics."""
    k = len(coeffs) - 1
    for deg in range(1, k // 2 + 1):
        for enc in range(p**deg):
            div = []
            e = enc
            for _ in range(deg):
                div.append(e % p)
                e //= p
            div.append(1)
            # remainder of coeffs by div
            rem = list(coeffs)
            for i in range(len(rem) - 1, deg - 1, -1):
                c = rem[i]
                if c:
                    for j in range(deg + 1):
                        rem[i - deg + j] = (rem[i - deg + j] - c * div[j]) % p
                    rem[i] = 0
            if not any(rem[:deg]):
                return False
    return True


def _find_modulus(p: int, k: int):
    """Smallest (by canonical encoding) monic irreducible of degree k."""
    for enc in range(p**k):
        coeffs = []
        e = enc
        for _ in range(k):
            coeffs.append(e % p)
            e //= p
        coeffs.append(1)
        if _irreducible_over_gfp(coeffs, p):
            return tuple(coeffs)
    raise RuntimeError("no irreducible modulus found")  # unreachable


def make_prime_field(p: int) -> FieldCtx:
    """GF(p) for prime p."""
    return FieldCtx(p, 1)


def make_extension_field(p: int, k: int) -> FieldCtx:
    """GF(p^k) for prime p and k >= 2."""
    if k < 2:
        raise ValueError("use make_prime_field for k = 1")
    return FieldCtx(p, k)


def field_of_order(q: int) -> FieldCtx:
    """GF(q) for a prime power q."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = min(d for d in range(2, isqrt(q) + 1) if q % d == 0) if not is_prime(q) else q
    k = 0
    rest = q
    while rest % p == 0:
        rest //= p
        k += 1
    if rest != 1:
        raise NotPrime(f"{q} is not a prime power")
    return FieldCtx(p, k)


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------


class FMatrix:
    """Dense square matrix over a FieldCtx, value-semantic."""

    __slots__ = ("ctx", "n", "rows")

    def __init__(self, ctx: FieldCtx, rows):
        self.ctx = ctx
        self.rows = tuple(tuple(int(x) for x in row) for row in rows)
        self.n = len(self.rows)
        if any(len(row) != self.n for row in self.rows):
            raise ValueError("matrix must be square")

    @classmethod
    def from_int_rows(cls, ctx: FieldCtx, rows) -> "FMatrix":
        """Build from integer entries, reducing into the prime subfield."""
        return cls(ctx, [[ctx.from_int(x) for x in row] for row in rows])

    @classmethod
    def zeros(cls, ctx: FieldCtx, n: int) -> "FMatrix":
        return cls(ctx, [[0] * n for _ in range(n)])

    @classmethod
    def identity(cls, ctx: FieldCtx, n: int) -> "FMatrix":
        return cls(ctx, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __eq__(self, other):
        if isinstance(other, FMatrix):
            return self.ctx == other.ctx and self.rows == other.rows
        return NotImplemented

    def __hash__(self):
        return hash((self.ctx, self.rows))

    def is_zero(self) -> bool:
        return all(all(x == 0 for x in row) for row in self.rows)

    def __add__(self, other):
        ctx = self.ctx
        return FMatrix(ctx, [
            [ctx.add(a, b) for a, b in zip(r1, r2)]
            for r1, r2 in zip(self.rows, other.rows)
        ])

    def scale(self, c: int) -> "FMatrix":
        ctx = self.ctx
        return FMatrix(ctx, [[ctx.mul(c, x) for x in row] for row in self.rows])

    def __matmul__(self, other):
        ctx = self.ctx
        n = self.n
        cols = list(zip(*other.rows))
        out = []
        for row in self.rows:
            out_row = []
            for col in cols:
                acc = 0
                for a, b in zip(row, col):
                    if a and b:
                        acc = ctx.add(acc, ctx.mul(a, b))
                out_row.append(acc)
            out.append(out_row)
        return FMatrix(ctx, out)

    def power(self, e: int) -> "FMatrix":
        result = FMatrix.identity(self.ctx, self.n)
        base = self
        while e:
            if e & 1:
                result = result @ base
            base = base @ base
            e >>= 1
        return result

    def rank(self) -> int:
        """Rank by exact forward elimination with row pivoting."""
        ctx = self.ctx
        a = [list(row) for row in self.rows]
        n = self.n
        rank = 0
        for col in range(n):
            pivot = next((r for r in range(rank, n) if a[r][col]), None)
            if pivot is None:
                continue
            a[rank], a[pivot] = a[pivot], a[rank]
            inv = ctx.inv(a[rank][col])
            a[rank] = [ctx.mul(inv, x) for x in a[rank]]
            for r in range(rank + 1, n):
                f = a[r][col]
                if f:
                    a[r] = [ctx.sub(x, ctx.mul(f, y)) for x, y in zip(a[r], a[rank])]
            rank += 1
        return rank


def mat_rank(m: FMatrix) -> int:
    return m.rank()


def rank_sequence(m: FMatrix) -> tuple[int, ...]:
    """(rank M, rank M^2, ..., rank M^(n-1)) for a nilpotent matrix."""
    power = m
    ranks = []
    for _ in range(m.n - 1):
        ranks.append(power.rank())
        power = power @ m
    if not power.is_zero():
        raise NotNilpotent(f"M^{m.n} is not zero")
    return tuple(ranks)


def jordan_type(m: FMatrix) -> Partition:
    """Jordan type of a nilpotent matrix."""
    return jordan_type_from_ranks(rank_sequence(m), m.n)
