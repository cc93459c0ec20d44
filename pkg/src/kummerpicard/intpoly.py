"""Exact univariate polynomial arithmetic over the integers.

Polynomials are lists of Python ints, ascending by degree, with no trailing
zeros (the zero polynomial is ``[0]``).  Everything here is arbitrary
precision; these routines back the characteristic-polynomial algebra where
coefficients grow like p^22 and beyond.
"""
from __future__ import annotations

from functools import lru_cache


def normalize(f: list[int]) -> list[int]:
    while len(f) > 1 and f[-1] == 0:
        f.pop()
    return f


def poly_mul(f: list[int], g: list[int]) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return normalize(out)


def poly_add(f: list[int], g: list[int]) -> list[int]:
    n = max(len(f), len(g))
    out = [0] * n
    for i, a in enumerate(f):
        out[i] += a
    for i, b in enumerate(g):
        out[i] += b
    return normalize(out)


def poly_eval(f: list[int], x):
    acc = 0
    for c in reversed(f):
        acc = acc * x + c
    return acc


def try_exact_div(f: list[int], g: list[int]) -> list[int] | None:
    """Quotient f/g over ZZ when the division is exact, else None.

    g must have an invertible-over-ZZ leading coefficient only in the sense
    that each elimination step must divide exactly; monic g always works.
    """
    if len(g) == 1 and g[0] == 0:
        raise ZeroDivisionError("division by zero polynomial")
    if len(f) < len(g):
        return None if any(f) else [0]
    r = list(f)
    lead = g[-1]
    out = [0] * (len(f) - len(g) + 1)
    for i in range(len(out) - 1, -1, -1):
        c = r[len(g) - 1 + i]
        if c % lead != 0:
            return None
        q = c // lead
        out[i] = q
        if q:
            for j, b in enumerate(g):
                r[i + j] -= q * b
    if any(r):
        return None
    return normalize(out)


def exact_div(f: list[int], g: list[int]) -> list[int]:
    q = try_exact_div(f, g)
    if q is None:
        raise ArithmeticError("inexact polynomial division")
    return q


@lru_cache(maxsize=None)
def cyclotomic(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending."""
    f = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            f = exact_div(f, list(cyclotomic(d)))
    return tuple(f)


def power_sums(f: list[int], nmax: int) -> list[int]:
    """Power sums s_1..s_nmax of the roots of a monic integer polynomial.

    Returned as a list with s[0] = deg f for convenience.
    """
    deg = len(f) - 1
    if f[-1] != 1:
        raise ValueError("monic polynomial required")
    # elementary symmetric functions: f = sum_{i} (-1)^i e_i T^{deg-i}
    e = [0] * (deg + 1)
    for i in range(deg + 1):
        e[i] = (-1) ** i * f[deg - i]
    s = [deg] + [0] * nmax
    for k in range(1, nmax + 1):
        if k <= deg:
            acc = (-1) ** (k - 1) * k * e[k]
            for i in range(1, k):
                acc += (-1) ** (i - 1) * e[i] * s[k - i]
        else:
            acc = 0
            for i in range(1, deg + 1):
                acc += (-1) ** (i - 1) * e[i] * s[k - i]
        s[k] = acc
    return s


def monic_from_power_sums(s: list[int], deg: int) -> list[int]:
    """Monic integer polynomial of given degree from power sums s[1..deg].

    Raises ArithmeticError if Newton's identities do not close over ZZ,
    which signals inconsistent input.
    """
    e = [1] + [0] * deg
    for k in range(1, deg + 1):
        acc = 0
        for i in range(1, k + 1):
            acc += (-1) ** (i - 1) * e[k - i] * s[i]
        if acc % k != 0:
            raise ArithmeticError("non-integral Newton identity output")
        e[k] = acc // k
    out = [0] * (deg + 1)
    for i in range(deg + 1):
        out[deg - i] = (-1) ** i * e[i]
    return out


def roots_power_poly(f: list[int], k: int) -> list[int]:
    """Monic polynomial whose roots are the k-th powers of the roots of f."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k == 1:
        return list(f)
    deg = len(f) - 1
    s = power_sums(f, deg * k)
    return monic_from_power_sums([deg] + [s[j * k] for j in range(1, deg + 1)], deg)
