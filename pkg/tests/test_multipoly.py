from kirillov.fields import field_of_order
from kirillov.multipoly import A, B, C, D, E, F, MultiPoly


def test_case2_identity():
    # f(c^2 - bd) == (b^2 + cf)c - (bc + df)b, exactly
    lhs = F * (C * C - B * D)
    rhs = (B * B + C * F) * C - (B * C + D * F) * B
    assert lhs == rhs


def test_binomial_square():
    assert (A + B) ** 2 == A * A + 2 * A * B + B * B


def test_eval_plain():
    entry = 2 * A * E - 2 * B * D + 2 * C * C
    assert entry.evaluate((1, 1, 1, 1, 1, 1)) == 2
    assert entry.evaluate({"a": 1, "b": 0, "c": 2, "d": 3, "e": 1, "f": 9}) == 2 - 0 + 8


def test_eval_in_field_matches_plain():
    import random

    rng = random.Random(9)
    entry = 2 * A * E - 2 * B * D + 2 * C * C
    for q in (5, 7, 25):
        ctx = field_of_order(q)
        for _ in range(20):
            vals = [rng.randrange(ctx.p) for _ in range(6)]  # prime-subfield values
            plain = entry.evaluate(vals) % ctx.p
            assert entry.evaluate(vals, ctx) == ctx.from_int(plain)


def test_zero_and_constants():
    assert (A - A).is_zero()
    assert MultiPoly.constant(0).is_zero()
    assert (A * 0).is_zero()
    assert MultiPoly.constant(3) + 2 == MultiPoly.constant(5)


def test_text():
    assert (2 * A * E - 2 * B * D + 2 * C * C).text() == "2ae - 2bd + 2c^2"
    assert MultiPoly().text() == "0"
