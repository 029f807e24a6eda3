"""Jordan-type counts for the exceptional Lie algebra g2.

The 14-dimensional algebra acts faithfully on a 7-dimensional space; the
six positive-root basis elements are built from the two generators by
exact integer brackets (with 1/2 and 1/3 scalings that must divide
exactly).  A general positive-root combination is the strictly upper
triangular matrix X parametrized by six field coefficients a..f.  This
module verifies the closed forms of X^2..X^6 symbolically, predicts rank
sequences from polynomial predicates in the parameters, counts all q^6
matrices per Jordan type by exhaustive census (validating the predicates
on every tuple), interpolates the counts back to polynomials in q, and
checks the leading coefficients against the Weyl-group dimensions
attached to the nilpotent orbits.

Characteristic 2 and 3 are excluded throughout (the structure constants
involve 2 and 3).
"""

from __future__ import annotations

import multiprocessing as mp
from dataclasses import dataclass
from functools import cache
from typing import NamedTuple

import numpy as np

from ._kernels import (
    FieldTables,
    decode_mixed_radix,
    decode_sequence,
    encode_sequences,
    power_rank_sequences,
)
from .errors import (
    BadCharacteristic,
    DuplicateAbscissa,
    InexactDivision,
    InsufficientPoints,
    PredicateMismatch,
    TooLarge,
)
from .fields import FieldCtx, FMatrix, field_of_order, make_prime_field, jordan_type
from .intpoly import IntPoly, Q, Q_MINUS_1, poly_interpolate
from .multipoly import A, B, C, D, E, F, MultiPoly, ZERO
from .partitions import Partition, jordan_type_from_ranks

DIM = 7
DEFAULT_BUDGET = 200_000_000
DEFAULT_BATCH = 1 << 15
DEFAULT_PRIMES = (5, 7, 11, 13, 17, 19, 23)
REDUCED_PRIMES = (5, 7, 11, 13, 17, 19)

FULL_RANK_SEQ = (6, 5, 4, 3, 2, 1)

# Number of conjugacy classes of the Chevalley group of type G2 over
# GF(q), recorded from the group-theory literature as context only; this
# artifact computes Jordan-type counts, not the class count.
CHEVALLEY_G2_CLASS_COUNT = IntPoly((-1, -1, 2, 1))  # q^3 + 2q^2 - q - 1

# positive roots m*alpha1 + n*alpha2 as (m, n); alpha1 is the short root
POSITIVE_ROOTS = ((1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2))
# the coefficient letters a..f attach to the roots in this order
PARAM_ROOTS = ((1, 0), (1, 1), (2, 1), (3, 1), (3, 2), (0, 1))


class G2Params(NamedTuple):
    """Field-encoded coefficients of the positive-root basis elements."""

    a: int
    b: int
    c: int
    d: int
    e: int
    f: int


def _require_char(ctx: FieldCtx) -> None:
    if ctx.p <= 3:
        raise BadCharacteristic(f"characteristic must exceed 3, got {ctx.p}")


# ---------------------------------------------------------------------------
# Chevalley construction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class G2Basis:
    """The six positive-root matrices of the 7-dimensional representation."""

    matrices: dict  # root (m, n) -> 7x7 tuple-of-tuples of ints

    def matrix(self, root) -> tuple:
        return self.matrices[tuple(root)]


def _unit_matrix(entries: dict) -> list[list[int]]:
    out = [[0] * DIM for _ in range(DIM)]
    for (i, j), v in entries.items():
        out[i - 1][j - 1] = v
    return out


def _bracket(x, y):
    def prod(u, v):
        return [[sum(u[i][k] * v[k][j] for k in range(DIM)) for j in range(DIM)]
                for i in range(DIM)]

    xy, yx = prod(x, y), prod(y, x)
    return [[xy[i][j] - yx[i][j] for j in range(DIM)] for i in range(DIM)]


def _scale_exact(mat, divisor: int):
    out = []
    for row in mat:
        new_row = []
        for v in row:
            if v % divisor:
                raise InexactDivision(f"entry {v} is not divisible by {divisor}")
            new_row.append(v // divisor)
        out.append(new_row)
    return out


@cache
def build_chevalley() -> G2Basis:
    """Build all six positive-root matrices from the two generators.

    The generator images are fixed 7x7 integer matrices; the remaining
    basis elements follow by brackets, with exact divisions by 2 and 3.
    All six come out strictly upper triangular.
    """
    e1 = _unit_matrix({(1, 2): 1, (3, 4): 2, (4, 5): 1, (6, 7): 1})
    e2 = _unit_matrix({(2, 3): 1, (5, 6): 1})
    e12 = _bracket(e1, e2)
    e112 = _scale_exact(_bracket(e12, e1), 2)
    e1112 = _scale_exact(_bracket(e112, e1), 3)
    e11122 = _bracket(e1112, e2)
    matrices = {
        (1, 0): e1,
        (0, 1): e2,
        (1, 1): e12,
        (2, 1): e112,
        (3, 1): e1112,
        (3, 2): e11122,
    }
    for root, mat in matrices.items():
        for i in range(DIM):
            for j in range(i + 1):
                if mat[i][j]:
                    raise AssertionError(f"basis element {root} is not strictly upper")
    return G2Basis(matrices={r: tuple(tuple(row) for row in m)
                             for r, m in matrices.items()})


def x_of(params: G2Params, ctx: FieldCtx) -> FMatrix:
    """The matrix a*E(1,0) + b*E(1,1) + c*E(2,1) + d*E(3,1) + e*E(3,2) + f*E(0,1)
    with entries reduced into ``ctx``."""
    _require_char(ctx)
    basis = build_chevalley().matrices
    rows = [[0] * DIM for _ in range(DIM)]
    for val, root in zip(params, PARAM_ROOTS):
        mat = basis[root]
        for i in range(DIM):
            for j in range(DIM):
                if mat[i][j]:
                    rows[i][j] = ctx.add(rows[i][j],
                                         ctx.mul(val, ctx.from_int(mat[i][j])))
    return FMatrix(ctx, rows)


# ---------------------------------------------------------------------------
# symbolic matrices and the transcribed closed forms
# ---------------------------------------------------------------------------


def symbolic_generic_matrix() -> list[list[MultiPoly]]:
    """X assembled from the Chevalley basis with symbolic coefficients."""
    basis = build_chevalley().matrices
    out = [[ZERO for _ in range(DIM)] for _ in range(DIM)]
    for var, root in zip((A, B, C, D, E, F), PARAM_ROOTS):
        mat = basis[root]
        for i in range(DIM):
            for j in range(DIM):
                if mat[i][j]:
                    out[i][j] = out[i][j] + mat[i][j] * var
    return out


def reference_matrix(power: int) -> list[list[MultiPoly]]:
    """Transcribed closed form of X^power for power 1..6."""
    z = ZERO
    if power == 1:
        return [
            [z, A, B, 2 * C, D, E, z],
            [z, z, F, -2 * B, -C, z, E],
            [z, z, z, 2 * A, z, -C, -D],
            [z, z, z, z, A, B, C],
            [z, z, z, z, z, F, -B],
            [z, z, z, z, z, z, A],
            [z, z, z, z, z, z, z],
        ]
    if power == 2:
        return [
            [z, z, A * F, z, A * C, B * C + D * F, 2 * A * E - 2 * B * D + 2 * C * C],
            [z, z, z, 2 * A * F, -2 * A * B, -2 * B * B - 2 * C * F, -(B * C) - D * F],
            [z, z, z, z, 2 * A * A, 2 * A * B, A * C],
            [z, z, z, z, z, A * F, z],
            [z, z, z, z, z, z, A * F],
            [z, z, z, z, z, z, z],
            [z, z, z, z, z, z, z],
        ]
    if power == 3:
        aaf = A * A * F
        return _sparse({(1, 4): 2 * aaf, (2, 5): 2 * aaf,
                        (3, 6): 2 * aaf, (4, 7): aaf})
    if power == 4:
        return _sparse({
            (1, 5): 2 * A * A * A * F,
            (1, 6): 2 * A * A * B * F,
            (1, 7): 2 * A * A * C * F,
            (2, 6): 2 * A * A * F * F,
            (2, 7): -2 * A * A * B * F,
            (3, 7): 2 * A * A * A * F,
        })
    if power == 5:
        v = 2 * A * A * A * F * F
        return _sparse({(1, 6): v, (2, 7): v})
    if power == 6:
        return _sparse({(1, 7): 2 * A * A * A * A * F * F})
    raise ValueError(f"no transcribed closed form for power {power}")


def _sparse(entries: dict) -> list[list[MultiPoly]]:
    out = [[ZERO for _ in range(DIM)] for _ in range(DIM)]
    for (i, j), v in entries.items():
        out[i - 1][j - 1] = v
    return out


def _sym_matmul(x, y):
    return [[sum((x[i][k] * y[k][j] for k in range(DIM)), ZERO)
             for j in range(DIM)] for i in range(DIM)]


@dataclass
class PowersReport:
    """Entrywise comparison of computed symbolic powers vs. closed forms."""

    template_mismatches: list  # (i, j, expected, got) for X itself
    power_mismatches: list  # (power, i, j, expected, got)

    @property
    def passed(self) -> bool:
        return not self.template_mismatches and not self.power_mismatches


def verify_displayed_powers() -> PowersReport:
    """Compare symbolic X and X^2..X^6 against the transcribed matrices."""
    generic = symbolic_generic_matrix()
    template = reference_matrix(1)
    template_mismatches = [
        (i + 1, j + 1, template[i][j], generic[i][j])
        for i in range(DIM) for j in range(DIM)
        if generic[i][j] != template[i][j]
    ]
    power_mismatches = []
    current = generic
    for power in range(2, 7):
        current = _sym_matmul(current, generic)
        expected = reference_matrix(power)
        for i in range(DIM):
            for j in range(DIM):
                if current[i][j] != expected[i][j]:
                    power_mismatches.append(
                        (power, i + 1, j + 1, expected[i][j], current[i][j]))
    return PowersReport(template_mismatches=template_mismatches,
                        power_mismatches=power_mismatches)


# ---------------------------------------------------------------------------
# rank-sequence prediction
# ---------------------------------------------------------------------------


def predicted_rank_sequence(params: G2Params, ctx: FieldCtx) -> tuple[int, ...]:
    """Rank sequence of X predicted from polynomial predicates alone.

    Outside the a*f != 0 regime every power beyond X^2 vanishes, so the
    sequence is determined by rank X and rank X^2:

    - a, f nonzero: always (6,5,4,3,2,1).
    - a = 0, f != 0: (2,0,...) iff b^2+cf = 0 = bc+df; otherwise rank X^2
      drops to 1 exactly when (bc+df)^2 - 4(b^2+cf)(c^2-bd) = 0.
    - a != 0, f = 0: rank X is always 4; rank X^2 is 1 iff 4ae-4bd+3c^2 = 0.
    - a = f = 0: rank X is 4 unless b = c = 0 (then 2 unless d = e = 0);
      rank X^2 is 1 iff (b != 0 and 3c^2-4bd = 0) or (b = 0 and c != 0).
    """
    _require_char(ctx)
    a, b, c, d, e, f = params
    mul, add, sub, sc = ctx.mul, ctx.add, ctx.sub, ctx.scale_int
    if a and f:
        return FULL_RANK_SEQ
    if f:  # a == 0
        u = add(mul(b, b), mul(c, f))
        v = add(mul(b, c), mul(d, f))
        if u == 0 and v == 0:
            return (2, 0, 0, 0, 0, 0)
        w = sub(mul(c, c), mul(b, d))
        disc = sub(mul(v, v), sc(4, mul(u, w)))
        return (4, 1, 0, 0, 0, 0) if disc == 0 else (4, 2, 0, 0, 0, 0)
    if a:  # f == 0
        t = add(sub(sc(4, mul(a, e)), sc(4, mul(b, d))), sc(3, mul(c, c)))
        return (4, 1, 0, 0, 0, 0) if t == 0 else (4, 2, 0, 0, 0, 0)
    # a == f == 0
    if b == 0 and c == 0:
        if d == 0 and e == 0:
            return (0, 0, 0, 0, 0, 0)
        return (2, 0, 0, 0, 0, 0)
    if b:
        t = sub(sc(3, mul(c, c)), sc(4, mul(b, d)))
        return (4, 1, 0, 0, 0, 0) if t == 0 else (4, 2, 0, 0, 0, 0)
    return (4, 1, 0, 0, 0, 0)  # b == 0, c != 0


def _predicted_batch(t: FieldTables, a: int, f: int, b, c, d, e) -> np.ndarray:
    """Vectorized predicted_rank_sequence for fixed a, f and b..e arrays."""
    size = len(b)
    out = np.zeros((size, 6), dtype=b.dtype)
    if a and f:
        out[:] = FULL_RANK_SEQ
        return out
    if f:  # a == 0
        u = t.add(t.mul(b, b), t.mul(c, f))
        v = t.add(t.mul(b, c), t.mul(d, f))
        w = t.add(t.mul(c, c), t.neg(t.mul(b, d)))
        disc = t.add(t.mul(v, v), t.neg(t.scale_int(4, t.mul(u, w))))
        quiet = (u == 0) & (v == 0)
        out[:, 0] = np.where(quiet, 2, 4)
        out[:, 1] = np.where(quiet, 0, np.where(disc == 0, 1, 2))
        return out
    if a:  # f == 0
        val = t.add(t.add(t.scale_int(4, t.mul(a, e)),
                          t.neg(t.scale_int(4, t.mul(b, d)))),
                    t.scale_int(3, t.mul(c, c)))
        out[:, 0] = 4
        out[:, 1] = np.where(val == 0, 1, 2)
        return out
    bc_zero = (b == 0) & (c == 0)
    de_zero = (d == 0) & (e == 0)
    val = t.add(t.scale_int(3, t.mul(c, c)), t.neg(t.scale_int(4, t.mul(b, d))))
    out[:, 0] = np.where(bc_zero, np.where(de_zero, 0, 2), 4)
    out[:, 1] = np.where(bc_zero, 0,
                         np.where(b != 0, np.where(val == 0, 1, 2), 1))
    return out


# ---------------------------------------------------------------------------
# census
# ---------------------------------------------------------------------------


@dataclass
class CensusReport:
    """Exhaustive per-Jordan-type counts over one field."""

    q: int
    counts: dict  # Partition -> int
    cases: dict  # (case, rank sequence) -> int; case 1: af!=0, 2: a=0, 3: f=0, 4: both
    total: int


def _case_of(a: int, f: int) -> int:
    if a and f:
        return 1
    if f:
        return 2
    if a:
        return 3
    return 4


def _g2_chunk(p: int, k: int, modulus, af_lo: int, af_hi: int, batch: int) -> dict:
    ctx = FieldCtx(p, k, _modulus=modulus)
    tables = FieldTables(ctx)
    basis = build_chevalley().matrices
    q = ctx.q
    inner = q**4
    tally: dict[tuple, int] = {}
    for af in range(af_lo, af_hi):
        a_val, f_val = divmod(af, q)
        case = _case_of(a_val, f_val)
        for lo in range(0, inner, batch):
            hi = min(lo + batch, inner)
            digits = decode_mixed_radix(lo, hi, q, 4, dtype=tables.dtype)
            b_arr, c_arr, d_arr, e_arr = (digits[:, i] for i in range(4))
            size = hi - lo
            a_arr = np.full(size, a_val, dtype=tables.dtype)
            f_arr = np.full(size, f_val, dtype=tables.dtype)
            mats = np.zeros((size, DIM, DIM), dtype=tables.dtype)
            for vals, root in zip((a_arr, b_arr, c_arr, d_arr, e_arr, f_arr),
                                  PARAM_ROOTS):
                mat = basis[root]
                for i in range(DIM):
                    for j in range(DIM):
                        if mat[i][j]:
                            mats[:, i, j] = tables.add(
                                mats[:, i, j], tables.scale_int(mat[i][j], vals))
            emb = tables.embed(mats)
            seqs = power_rank_sequences(emb, p, tables.inv_mod_p, DIM, k)
            actual_keys = encode_sequences(seqs)
            pred = _predicted_batch(tables, a_val, f_val,
                                    b_arr, c_arr, d_arr, e_arr)
            bad = actual_keys != encode_sequences(pred)
            if bad.any():
                i = int(np.argmax(bad))
                raise PredicateMismatch(
                    f"q={q} params (a,b,c,d,e,f)="
                    f"({a_val},{int(b_arr[i])},{int(c_arr[i])},{int(d_arr[i])},"
                    f"{int(e_arr[i])},{f_val}): predicted "
                    f"{tuple(int(x) for x in pred[i])}, "
                    f"computed {tuple(int(x) for x in seqs[i])}")
            keys, counts = np.unique(actual_keys, return_counts=True)
            for key, cnt in zip(keys, counts):
                kt = (case, decode_sequence(int(key), DIM - 1))
                tally[kt] = tally.get(kt, 0) + int(cnt)
    return tally


def g2_census(ctx: FieldCtx, workers: int = 1, budget: int = DEFAULT_BUDGET,
              batch: int = DEFAULT_BATCH) -> CensusReport:
    """Walk all q^6 parameter tuples and tally Jordan types.

    Rank sequences are computed from the matrices themselves; the
    polynomial predicates of predicted_rank_sequence are validated
    against the computed sequence for every single tuple, and any
    disagreement aborts the census.
    """
    _require_char(ctx)
    space = ctx.q**6
    if space > budget:
        raise TooLarge(f"{space} tuples exceed the budget {budget}")
    workers = max(1, int(workers))
    af_total = ctx.q**2
    bounds = np.linspace(0, af_total, min(workers, af_total) + 1, dtype=np.int64)
    args = [(ctx.p, ctx.k, ctx.modulus, int(lo), int(hi), batch)
            for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    if len(args) == 1:
        partials = [_g2_chunk(*args[0])]
    else:
        with mp.get_context("fork").Pool(len(args)) as pool:
            partials = pool.starmap(_g2_chunk, args)
    cases: dict[tuple, int] = {}
    for part in partials:
        for key, cnt in part.items():
            cases[key] = cases.get(key, 0) + cnt
    counts: dict[Partition, int] = {}
    for (_, seq), cnt in cases.items():
        lam = jordan_type_from_ranks(seq, DIM)
        counts[lam] = counts.get(lam, 0) + cnt
    return CensusReport(q=ctx.q, counts=counts,
                        cases=dict(sorted(cases.items())),
                        total=sum(counts.values()))


_census_cache: dict[int, CensusReport] = {}


def census_cached(q: int, workers: int = 1, budget: int = DEFAULT_BUDGET) -> CensusReport:
    """Census for GF(q), memoized per field order (results are pure)."""
    if q not in _census_cache:
        _census_cache[q] = g2_census(field_of_order(q), workers=workers,
                                     budget=budget)
    return _census_cache[q]


class CaseCount(NamedTuple):
    case: int
    rank_seq: tuple
    count: int


def closed_form_case_counts(q: int) -> list[CaseCount]:
    """The per-case closed-form tallies, evaluated at q.

    Only the directly counted case/sequence pairs appear; the
    (4,2,0,0,0,0) sequences are recovered by complement.
    """
    if field_of_order(q).p <= 3:
        raise BadCharacteristic(f"q={q} has characteristic <= 3")
    return [
        CaseCount(1, FULL_RANK_SEQ, (q - 1) ** 2 * q**4),
        CaseCount(2, (2, 0, 0, 0, 0, 0), q**2 * (q - 1)),
        CaseCount(2, (4, 1, 0, 0, 0, 0), q**2 * (q - 1) ** 2),
        CaseCount(3, (4, 1, 0, 0, 0, 0), q**3 * (q - 1)),
        CaseCount(4, (4, 1, 0, 0, 0, 0), 2 * q**2 * (q - 1)),
        CaseCount(4, (2, 0, 0, 0, 0, 0), (q - 1) * (q + 1)),
        CaseCount(4, (0, 0, 0, 0, 0, 0), 1),
    ]


# ---------------------------------------------------------------------------
# the five counting polynomials
# ---------------------------------------------------------------------------


@cache
def expected_polynomials() -> dict:
    """The five nonzero counting polynomials, in factored closed form."""
    one_plus_2q = IntPoly((1, 2))
    return {
        Partition((7,)): Q**4 * Q_MINUS_1**2,
        Partition((3, 3, 1)): Q**2 * Q_MINUS_1**2 * one_plus_2q,
        Partition((3, 2, 2)): Q**2 * Q_MINUS_1 * one_plus_2q,
        Partition((2, 2, 1, 1, 1)): Q_MINUS_1 * IntPoly((1, 1, 1)),
        Partition((1,) * 7): IntPoly((1,)),
    }


COMPLEMENT_PARTITION = Partition((3, 3, 1))  # recovered as q^6 minus the rest
DEGREE6_PARTITION = Partition((7,))  # the one that needs 7 interpolation points


@dataclass
class InterpolationResult:
    orders: tuple
    polynomials: dict  # Partition -> IntPoly
    routes: dict  # Partition -> "interpolated" | "complement"
    complement_ok: bool
    matches_expected: dict  # Partition -> bool

    @property
    def passed(self) -> bool:
        return self.complement_ok and all(self.matches_expected.values())


def g2_interpolate(orders=None, workers: int = 1,
                   budget: int = DEFAULT_BUDGET) -> InterpolationResult:
    """Recover the counting polynomials from censuses at several orders.

    With >= 7 orders every polynomial is interpolated directly and the
    complement identity (q^6 minus the other four) is cross-checked for
    the (3,3,1) count.  With exactly 6 orders the degree-6 count for (7)
    is recovered through the complement instead, and its census values
    are verified against that polynomial.
    """
    orders = tuple(orders) if orders is not None else DEFAULT_PRIMES
    if len(set(orders)) != len(orders):
        raise DuplicateAbscissa(f"duplicate field orders in {orders}")
    if len(orders) < 6:
        raise InsufficientPoints(
            f"need at least 6 field orders, got {len(orders)}")
    reports = {q: census_cached(q, workers=workers, budget=budget)
               for q in orders}
    lams = list(expected_polynomials().keys())
    points = {lam: [(q, reports[q].counts.get(lam, 0)) for q in orders]
              for lam in lams}

    polynomials: dict = {}
    routes: dict = {}
    if len(orders) >= 7:
        for lam in lams:
            polynomials[lam] = poly_interpolate(points[lam])
            routes[lam] = "interpolated"
        complement = Q**6
        for lam in lams:
            if lam != COMPLEMENT_PARTITION:
                complement = complement - polynomials[lam]
        complement_ok = complement == polynomials[COMPLEMENT_PARTITION]
    else:
        for lam in lams:
            if lam == DEGREE6_PARTITION:
                continue
            polynomials[lam] = poly_interpolate(points[lam])
            routes[lam] = "interpolated"
        complement = Q**6
        for lam, poly in polynomials.items():
            complement = complement - poly
        polynomials[DEGREE6_PARTITION] = complement
        routes[DEGREE6_PARTITION] = "complement"
        complement_ok = all(complement(q) == count
                            for q, count in points[DEGREE6_PARTITION])
    matches = {lam: polynomials[lam] == expected_polynomials()[lam]
               for lam in lams}
    return InterpolationResult(orders=orders, polynomials=polynomials,
                               routes=routes, complement_ok=complement_ok,
                               matches_expected=matches)


# ---------------------------------------------------------------------------
# nilpotent orbits and Weyl-group dimensions
# ---------------------------------------------------------------------------


class SpringerRow(NamedTuple):
    """A nilpotent orbit: weighted Dynkin diagram (short root first),
    representative as a sum of positive-root basis elements, Jordan type,
    and the dimension of the attached Weyl-group representation."""

    orbit: str
    diagram: tuple
    representative: tuple  # roots (m, n) to add up
    partition: Partition
    dimension: int


SPRINGER_TABLE = (
    SpringerRow("0", (0, 0), (), Partition((1,) * 7), 1),
    SpringerRow("A1", (0, 1), ((3, 2),), Partition((2, 2, 1, 1, 1)), 1),
    SpringerRow("A1-tilde", (1, 0), ((2, 1),), Partition((3, 2, 2)), 2),
    SpringerRow("A1+A1-tilde", (0, 2), ((1, 0), (2, 1)), Partition((3, 3, 1)), 2),
    SpringerRow("G2", (2, 2), ((1, 0), (0, 1)), Partition((7,)), 1),
)


@dataclass
class SpringerReport:
    orbit_entries: list  # (orbit, expected partition, computed, lead, dim, ok)
    typea_entries: list  # (partition, leading, hook dimension, ok)

    @property
    def passed(self) -> bool:
        return (all(e[-1] for e in self.orbit_entries)
                and all(e[-1] for e in self.typea_entries))


def springer_check(typea_max_n: int = 8) -> SpringerReport:
    """Check orbit representatives and leading coefficients.

    Each representative is built over GF(5) and its Jordan type compared
    with the tabulated partition; each counting polynomial's leading
    coefficient is compared with the tabulated Weyl-group dimension; and
    for every partition with n <= typea_max_n the type-A leading
    coefficient is compared with the hook-length dimension.
    """
    from .partitions import partitions_of
    from .typea import kirillov_recursion

    ctx = make_prime_field(5)
    basis = build_chevalley().matrices
    orbit_entries = []
    for row in SPRINGER_TABLE:
        total = [[0] * DIM for _ in range(DIM)]
        for root in row.representative:
            mat = basis[root]
            for i in range(DIM):
                for j in range(DIM):
                    total[i][j] += mat[i][j]
        computed = jordan_type(FMatrix.from_int_rows(ctx, total))
        lead = expected_polynomials()[row.partition].leading
        ok = computed == row.partition and lead == row.dimension
        orbit_entries.append((row.orbit, row.partition, computed, lead,
                              row.dimension, ok))
    typea_entries = []
    for n in range(1, typea_max_n + 1):
        for lam in partitions_of(n):
            lead = kirillov_recursion(lam).leading
            hook = lam.hook_dimension()
            typea_entries.append((lam, lead, hook, lead == hook))
    return SpringerReport(orbit_entries=orbit_entries,
                          typea_entries=typea_entries)
