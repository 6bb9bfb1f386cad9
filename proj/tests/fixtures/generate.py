"""Writes the family fixtures from closed forms, independently of the library."""

import json
from fractions import Fraction as F
from math import comb, factorial
from pathlib import Path

HERE = Path(__file__).parent


def s(xs):
    return [str(F(x)) for x in xs]


def poch(a, n):
    out = F(1)
    for k in range(n):
        out *= a + k
    return out


def chebyshev_u(order, n):
    moments = [F(comb(2 * (k // 2), k // 2), (k // 2 + 1) * 4 ** (k // 2)) if k % 2 == 0 else 0
               for k in range(order)]
    return {
        "family": "chebyshev-u", "alpha": "0", "order": order, "moments": s(moments),
        "expected": {
            "b": s([0] * n),
            "a": s([F(1, 4)] * (n - 1)),
            "values_at_zero": s([0 if k % 2 else F((-1) ** (k // 2), 2 ** k) for k in range(n)]),
            "a_minus": s([F(-1, 4)] + [F(k + 2, 4 * k) if k % 2 == 0 else F(k - 1, 4 * (k + 1))
                                       for k in range(2, n)]),
            "alpha2": s([F(k + 2, 4 * k) if k % 2 == 0 else F(1, 4) for k in range(2, n + 1)]),
        },
    }


def chebyshev_t(order, n):
    moments = [F(comb(k, k // 2), 2 ** k) if k % 2 == 0 else 0 for k in range(order)]
    return {
        "family": "chebyshev-t", "alpha": "0", "order": order, "moments": s(moments),
        "expected": {
            "b": s([0] * n),
            "a": s([F(1, 2)] + [F(1, 4)] * (n - 2)),
            "values_at_zero": s([1] + [0 if k % 2 else F((-1) ** (k // 2), 2 ** (k - 1))
                                       for k in range(1, n)]),
            "a_minus": s([F(-1, 2)] + [F(k + 1, 4 * (k - 1)) if k % 2 == 0 else F(k - 2, 4 * k)
                                       for k in range(2, n)]),
            "alpha2": s([F(k + 1, 4 * (k - 1)) if k % 2 == 0 else F(1, 4) for k in range(2, n + 1)]),
            "d_star": s([F(2) ** (3 - 2 * k) * (1 - k) if k % 2 == 0 else -F(2) ** (3 - 2 * k) * k
                         for k in range(2, n + 1)]),
        },
    }


def laguerre(alpha, order, n):
    a = F(alpha)
    moments = [poch(a + 2, k) for k in range(order)]
    return {
        "family": "laguerre", "alpha": str(a), "order": order, "moments": s(moments),
        "expected": {
            "b": s([2 * k + a + 2 for k in range(n)]),
            "a": s([k * (k + a + 1) for k in range(1, n)]),
            "a_minus": s([-(a + 2) * (a + 3)] + [(k - 1) * (k + a + 2) for k in range(2, n)]),
            "ell": s(list(range(1, n + 1))),
            "beta": s([a + k + 1 for k in range(n)]),
            "hat_b": s([2 * k + a + 1 for k in range(n)]),
            "hat_a": s([k * (k + a) for k in range(1, n)]),
            "assoc_zero": s([F((-1) ** k) / (a + 1) * (poch(a + 2, k + 1) - factorial(k + 1))
                             for k in range(n)]),
        },
    }


def main():
    order = 24
    n = (order - 4) // 2
    fixtures = {
        "chebyshev-u.json": chebyshev_u(order, n),
        "chebyshev-t.json": chebyshev_t(order, n),
        "laguerre-0.json": laguerre(0, order, n),
        "laguerre-1_2.json": laguerre(F(1, 2), order, n),
    }
    for name, body in fixtures.items():
        (HERE / name).write_text(json.dumps(body, indent=2) + "\n")


if __name__ == "__main__":
    main()
